#ifndef PGW_SERIALIZE_HPP
#define PGW_SERIALIZE_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "pgw/context.hpp"
#include "pgw/coulomb.hpp"
#include "pgw/fit.hpp"
#include "pgw/laguerre.hpp"
#include "pgw/ortho.hpp"
#include "pgw/residual.hpp"

namespace pgw {

// Insertion-ordered, so dumps are byte-stable.
using Json = nlohmann::ordered_json;

// Shortest decimal that reads back to the same value at its precision.
std::string decimal(const Real& x);

Json to_json(const WeightParams& p);
Json to_json(const NumericContext& ctx);
Json to_json(const ResidualReport& r);
Json to_json(const OrthoTable& table);
Json to_json(const LaguerreTable& table);
Json to_json(const FitResult& fit);
Json to_json(const EquilibriumMeasure& eq);

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Header line then one line per row; fields with , " or newline are quoted.
  std::string str() const;
};

Csv residuals_csv(const std::vector<ResidualReport>& reports);
Csv table_csv(const OrthoTable& table);

}  // namespace pgw

#endif  // PGW_SERIALIZE_HPP
