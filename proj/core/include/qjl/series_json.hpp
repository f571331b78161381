#pragma once

#include <string>

#include "qjl/q_series.hpp"
#include "qjl/qy_series.hpp"

namespace qjl {

// {weight, q_offset: "p/q", trunc, terms: [{n, coeff: {num: [[exp, re, im]...],
// den: [...]}}]}; zero coefficients are omitted. Rationals are "a/b" strings.
std::string to_json(const QYSeries &s, int indent = -1);
// Throws ParseError on malformed input.
QYSeries qy_series_from_json(const std::string &text);

// {weight, q_offset, step, trunc, terms: [{n, re, im}]}
std::string to_json(const QSeries &s, int indent = -1);
QSeries q_series_from_json(const std::string &text);

} // namespace qjl
