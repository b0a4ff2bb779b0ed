#pragma once

// JSON documents emitted by the command line tool. Every number is a string.

#include "charlab/characters.hpp"
#include "charlab/combinat.hpp"
#include "charlab/identities.hpp"

#include "json.hpp"

#include <optional>
#include <vector>

namespace charlab {

using Json = nlohmann::ordered_json;

/// {family, shape, point, value}; point is the evaluation point as "p/q" strings.
Json eval_json(const CharacterSpec& spec, const std::vector<Rational>& point, const Rational& value);
/// {family, shape, specialization, value} with specialization "principal" or "principal-negated".
Json eval_json(const CharacterSpec& spec, bool negate, const Integer& value);

/// {identity, params, mode, trials, seed, verdict, counterexample?, note?}.
Json to_json(const VerificationReport& r);

/// {family, params, methods, consistent}; a method skipped by the guard reads "skipped".
Json to_json(const CountReport& r);

}  // namespace charlab
