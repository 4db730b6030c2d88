#pragma once

#include "prismlab/cell.hpp"
#include "prismlab/orientation.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace prismlab {

/**
 * A prism complex described only by its top cells and the codimension-1
 * cells they share. For each incidence the supplier gives the sign the face
 * inherits when the top cell carries its "+" orientation.
 */
struct GenericPrismComplex {
    struct TopCell {
        std::string id;
        std::vector<int> factors; // simplex dimensions of the product
    };
    struct Coface {
        std::size_t top = 0; // index into tops
        int induced_sign_if_plus = 1;
    };
    struct Face {
        std::string id;
        std::vector<Coface> cofaces;
    };

    std::vector<TopCell> tops;
    std::vector<Face> faces;

    /// Throws ParseError on duplicate ids, dangling references, bad signs,
    /// repeated cofaces, empty coface lists or mixed top dimensions.
    void validate() const;
};

/// Y_{N,r} in the generic form, induced signs taken from the boundary operator.
GenericPrismComplex to_generic(const ComplexSpec& spec);

enum class SearchMethod { Auto, Exhaustive, Propagation };

/// Below this many top cells Auto searches exhaustively.
inline constexpr std::size_t kExhaustiveSearchLimit = 25;

struct GenericVerdict {
    bool satisfiable = false;
    std::vector<int> witness; // one sign per top cell when satisfiable
    SearchMethod method = SearchMethod::Auto;
    /// Per-face induced signs under the witness (under all "+" when UNSAT);
    /// violations list the faces of the first contradiction found.
    CoherenceReport report;
};

/**
 * Decides whether some choice of top-cell signs makes every face inherit a
 * single sign from all of its cofaces.
 */
GenericVerdict verify_generic_prism_complex(const GenericPrismComplex& complex,
                                            SearchMethod method = SearchMethod::Auto);

const char* to_string(SearchMethod method);

} // namespace prismlab
