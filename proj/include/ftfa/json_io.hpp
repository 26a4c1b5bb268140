#ifndef FTFA_JSON_IO_HPP_
#define FTFA_JSON_IO_HPP_

#include <json.hpp>

#include "ftfa/configs.hpp"
#include "ftfa/oracle.hpp"

namespace ftfa {

// All emitted documents carry {"schema": "ftfa-kit/1"} and fixed key order,
// so byte-identical inputs give byte-identical outputs. Matrix entries are
// decimal strings (they may exceed 64 bits); vectors accept numbers or
// strings and are emitted as numbers when they fit.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "ftfa-kit/1";

Json int_to_json(const Int& x);
Int json_to_int(const Json& j);

Json vec_to_json(const IntVec& v);
IntVec json_to_vec(const Json& j);

Json matrix_to_json(const IntMatrix& m);
IntMatrix json_to_matrix(const Json& j, size_t expect_cols);

Json word_to_json(const Word& w);
Word json_to_word(const Json& j);

Json element_to_json(const FtfaElement& e);
FtfaElement json_to_element(const Json& j, int m);

Json basis_to_json(const SubgroupBasis& b);
SubgroupBasis json_to_basis(const Json& j);

// {"n":..,"m":..,"generators":[{"word":..,"vec":[..]},..]}; also accepts a
// basis document (pairs + lattice re-read as generators).
std::vector<FtfaElement> json_to_generators(const Json& j, int& n, int& m);

Json automaton_to_json(const Automaton& a);

Json verdict_to_json(const FgVerdict& v);
Json intersect_result_to_json(const IntersectResult& r);

Json configuration_to_json(const Configuration& c);
Configuration json_to_configuration(const Json& j);

Json realization_to_json(const Realization& r);
Realization json_to_realization(const Json& j);

// Standalone subgroup specification: a generator/basis document, or a
// parametric {"n":..,"m":..,"kind":"parametric","pieces":[...]} document.
SubgroupSpec json_to_spec(const Json& j);

Json report_to_json(const VerifyReport& rep, const Configuration& c);

Json ball_to_json(const Ball& b);

Json obstruction_to_json(const ObstructionBound& b);

}  // namespace ftfa

#endif
