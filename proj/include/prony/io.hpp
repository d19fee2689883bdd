#ifndef PRONY_IO_HPP
#define PRONY_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "vendor/json.hpp"

#include "prony/oracle.hpp"
#include "prony/prony.hpp"
#include "prony/relative.hpp"
#include "prony/structures.hpp"

namespace prony::io {

using Json = nlohmann::ordered_json;

// Exit status: 0 success, 1 bad input, 2 the algorithm could not finish.
int exit_code(Errc code);

Json read_json_file(const std::string& path);  // InvalidInput on failure
std::string dump(const Json& j);               // two-space indent, trailing newline

// Exponent keys use the "(2,0)" form.
Exponent parse_exponent_key(const std::string& key);
std::string exponent_key(const Exponent& e);

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);  // "p/q" strings or integers
Json to_json(const Exponent& e);
Json to_json(const Point& x);
Point point_from_json(const Json& j);

Json to_json(const PointSet& x);
PointSet point_set_from_json(const Json& j);

Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j, std::size_t n);

Json to_json(const AlgebraicSet& y);
AlgebraicSet algebraic_set_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

// Exact sample file. A generator, when given, answers indices the table
// lacks; without one a missing index raises MissingSample.
struct SampleTable {
  std::size_t n = 1;
  Domain domain = Domain::nat;
  std::map<LatticeIndex, Rational> values;
};
Json to_json(const SampleTable& t);
SampleTable sample_table_from_json(const Json& j);
SampleTable tabulate(SampleOracle& f, const std::vector<LatticeIndex>& indices);

struct FloatSampleTable {
  std::size_t n = 1;
  Domain domain = Domain::integer;
  std::map<LatticeIndex, double> values;
};
Json to_json(const FloatSampleTable& t);
FloatSampleTable float_sample_table_from_json(const Json& j);

Json generator_to_json(const GeneratorSpec& g);
GeneratorSpec generator_from_json(const Json& j);

Json to_json(const PronyOutcome& o);
PronyOutcome outcome_from_json(const Json& j);

Json to_json(const FloatOutcome& o);

// Fixed-matrix structure file: {"n":1,"matrix":[[...]],"columns":[[0],...]}.
PronyStructureSpec fixed_structure_from_json(const Json& j);

}  // namespace prony::io

#endif  // PRONY_IO_HPP
