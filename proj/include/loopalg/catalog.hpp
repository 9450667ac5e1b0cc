#ifndef LOOPALG_CATALOG_HPP
#define LOOPALG_CATALOG_HPP

#include "loopalg/bv.hpp"

namespace loopalg {

enum class ModelFamily {
    Circle_Z,
    S3_Z,
    RP3_Z,
    RP3_Q,  // RP3_Z with coefficients extended to Q; for the SO(3) cross-check
    SO_odd_Q,   // SO(2m+1), rational coefficients
    SO_even_Q,  // SO(2m+2), rational coefficients
    SO_odd_F2,  // SO(2m+1), mod-2 coefficients
    SO_even_F2  // SO(2m+2), mod-2 coefficients
};

struct ModelId {
    ModelFamily family = ModelFamily::Circle_Z;
    unsigned m = 0;  // rank parameter; meaningful for the SO families only

    bool operator==(const ModelId&) const = default;
};

/// Rank cap keeping verification suites fast.
inline constexpr unsigned kDefaultRankLimit = 6;

std::string to_string(const ModelId& id);
/// Inverse of to_string: "Circle_Z", "SO_odd_F2(2)", ...
ModelId parse_model_id(const std::string& name, unsigned rank_limit = kDefaultRankLimit);

/// Fully validated model; throws ValidationError naming the violated
/// invariant.
LoopModel build(const ModelId& id, unsigned rank_limit = kDefaultRankLimit);

/// The fifteen standard models: the three Z-models plus the four SO families
/// at m = 1..max_m.  RP3_Q is excluded (cross-check constructor only).
std::vector<ModelId> standard_catalog(unsigned max_m = 3);

struct GoldenEntry {
    LoopElement input;
    LoopElement expected;  // closed-form Delta(input)
};

/// Closed-form Delta values on a generating family, for use as test fixtures.
std::vector<GoldenEntry> golden_delta_table(const ModelId& id, const LoopModel& M);

}  // namespace loopalg

#endif
