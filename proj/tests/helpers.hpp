#pragma once

#include "oracles.hpp"

#include <schroder/core.hpp>
#include <schroder/position_set.hpp>

#include <string>
#include <vector>

inline schroder::Permutation P(const std::string& text) {
    return schroder::make_permutation(schroder::parse_word(text));
}
inline schroder::InversionSequence E(const std::string& text) {
    return schroder::make_inversion_sequence(schroder::parse_word(text));
}
inline oracle::Word W(std::span<const int> w) { return {w.begin(), w.end()}; }
inline oracle::Set S(const schroder::PositionSet& s) { return s.members(); }
