#ifndef DWPC_IDENTITIES_HPP
#define DWPC_IDENTITIES_HPP

#include <functional>
#include <string>
#include <vector>

#include "dwpc/dwp.hpp"
#include "dwpc/rng.hpp"

namespace dwpc {

/// Random constant-coefficient argument vectors for one evaluation:
/// X,Y,Z on the base block, U,V,W on the fiber block.
struct ArgDraw {
    Vec X, Y, Z, U, V, W;
};

ArgDraw draw_args(Rng& rng, int n1, int n2);

struct ValuePair {
    Vec closed, oracle;
    double residual() const;
    double scale() const;
};

/// One closed-form identity: evaluates the displayed formula (and, for errata
/// candidates, the oracle-confirmed corrected form) against the product-chart
/// oracle at a point.
struct IdentityDef {
    std::string key;
    std::string statement;
    PSide side;  // None = Levi-Civita family, applicable to every entry
    double tol;
    bool errata;
    std::string errata_note;
    ValuePair (*eval)(const DwpPoint&, const ArgDraw&, const Convention&, bool corrected);
};

const std::vector<IdentityDef>& identity_registry();
const IdentityDef* find_identity(const std::string& key);

}  // namespace dwpc

#endif
