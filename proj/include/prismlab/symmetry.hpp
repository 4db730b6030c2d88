#pragma once

#include "prismlab/cell.hpp"
#include "prismlab/prism_complex.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace prismlab {

/**
 * Bijection of the part indices {0..r-1}; image(i) is where part i goes.
 * Composition follows functions: (a * b)(i) = a(b(i)).
 */
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument unless `images` is a bijection of {0..r-1}.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int r);
    static Permutation transposition(int r, int a, int b);
    /// i -> i + 1 (mod r), the cyclic shift.
    static Permutation cycle(int r);
    /// All r! permutations in lexicographic order of their image lists.
    static std::vector<Permutation> all(int r);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_.at(static_cast<std::size_t>(i)); }
    const std::vector<int>& images() const { return images_; }
    bool is_identity() const;
    Permutation inverse() const;

    /// One-line form with 1-based images, e.g. "[2 1 3]".
    std::string to_string() const;

    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// Moves part i of `cell` to position sigma(i).
Cell act(const Permutation& sigma, const Cell& cell);

struct FreeActionReport {
    bool pass = true;
    std::size_t cells_checked = 0;
    struct Fixed {
        Permutation sigma;
        Cell cell;
    };
    std::vector<Fixed> fixed; // non-identity sigma with sigma . c == c
};

FreeActionReport verify_free_action(const ComplexSpec& spec);

struct Orbit {
    Cell representative; // lexicographically least member
    std::vector<Cell> cells;

    std::size_t size() const { return cells.size(); }
};

/// Orbits of the S_r action on the k-cells, sorted by representative.
std::vector<Orbit> orbits(const ComplexSpec& spec, int k);

/// f_k / r! per dimension. Throws FreenessViolationError if some f_k is not divisible.
FVector quotient_f_vector(const ComplexSpec& spec);

/// The parts of `cell` as pairwise disjoint faces of the N-simplex.
std::vector<std::vector<Vertex>> complementary_faces(const Cell& cell);

/// Face dimensions |V_i| - 1.
std::vector<int> face_dimensions(const Cell& cell);

/**
 * How sigma carries the O-orientation: the orientation of F moved to sigma.F
 * (factor reordering costs (-1)^(d_i d_j) per inverted pair) compared with
 * the O-orientation sign of sigma.F.
 */
struct EquivarianceCount {
    Permutation sigma;
    std::size_t preserved = 0;
    std::size_t reversed = 0;
};

std::vector<EquivarianceCount> orientation_equivariance(const ComplexSpec& spec);

} // namespace prismlab
