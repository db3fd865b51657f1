#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace nilschur {

/// Integer partition in canonical form: weakly decreasing positive parts with
/// trailing zeros stripped on construction.  Construction from a sequence that
/// is not weakly decreasing throws.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    static Partition single_row(int s);    // (s); s == 0 gives the empty shape
    static Partition single_column(int k); // (1,...,1) with k ones

    /// Total number of boxes.
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    /// 1-based part access; zero beyond the last part.
    int part(int i) const;
    const std::vector<int>& parts() const { return parts_; }
    bool is_empty() const { return parts_.empty(); }

    Partition conjugate() const;
    bool fits_in_box(int rows, int cols) const;

    auto operator<=>(const Partition&) const = default;

    std::string to_string() const; // "(3,1,1)"; "()" for the empty shape

private:
    std::vector<int> parts_;
};

/// Permutation of {1..n} in one-line notation.  Composition is composition of
/// maps: (u.compose(v))(i) = u(v(i)).
class Permutation {
public:
    explicit Permutation(int n); // identity
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n) { return Permutation(n); }
    static Permutation adjacent_transposition(int n, int r); // swaps r and r+1
    static Permutation longest_element(int n);               // i -> n+1-i

    int n() const { return static_cast<int>(images_.size()); }
    /// 1-based application.
    int image(int i) const;
    const std::vector<int>& one_line() const { return images_; }

    Permutation compose(const Permutation& other) const;
    Permutation inverse() const;
    /// Coxeter length = number of inversions.
    int length() const;
    bool is_identity() const;

    auto operator<=>(const Permutation&) const = default;

    std::string to_string() const; // "[2,3,1]"

private:
    std::vector<int> images_;
};

/// Strictly increasing tuple 1 <= t_1 < ... < t_n <= ell; records which n of
/// the ell available slots are occupied.
class StrictTuple {
public:
    StrictTuple(std::vector<int> entries, int ell);

    int n() const { return static_cast<int>(entries_.size()); }
    int ell() const { return ell_; }
    /// 1-based entry access.
    int entry(int i) const;
    const std::vector<int>& entries() const { return entries_; }

    auto operator<=>(const StrictTuple&) const = default;

    std::string to_string() const; // "(1,3)"

private:
    std::vector<int> entries_;
    int ell_ = 0;
};

/// Schubert basis label for H*(G_{k,m}): weakly increasing entries
/// 0 <= a_1 <= ... <= a_k <= m.  The cohomological degree is twice the
/// entry sum.
class SchubertIndex {
public:
    SchubertIndex(std::vector<int> entries, int cap);

    int k() const { return static_cast<int>(entries_.size()); }
    int cap() const { return cap_; }
    int ell() const { return k() + cap_; }
    /// 1-based entry access.
    int entry(int i) const;
    const std::vector<int>& entries() const { return entries_; }
    int weight() const;

    /// The partition whose parts are the entries reversed.
    Partition to_partition() const;
    static SchubertIndex from_partition(const Partition& shape, int k, int cap);

    auto operator<=>(const SchubertIndex&) const = default;

    std::string to_string() const; // "(0,1)"

private:
    std::vector<int> entries_;
    int cap_ = 0;
};

/// An ell-slot incidence mask: each marked slot carries a single box, the
/// rest are empty.  Equivalent data to a StrictTuple via theta.
class MultipartitionMask {
public:
    explicit MultipartitionMask(std::vector<bool> slots);

    int ell() const { return static_cast<int>(slots_.size()); }
    int marked_count() const;
    /// 1-based slot access.
    bool marked(int i) const;
    const std::vector<bool>& slots() const { return slots_; }

    auto operator<=>(const MultipartitionMask&) const = default;

    std::string to_string() const; // "[0,1,1,0]"

private:
    std::vector<bool> slots_;
};

// --- bijections between the index systems ---------------------------------

/// Positions of the marked slots, in increasing order.
StrictTuple theta(const MultipartitionMask& mask);
MultipartitionMask theta_inv(const StrictTuple& tuple);

/// Box partition attached to a strict tuple: part_i = ell - t_i - n + i.
/// Lands in the n x (ell-n) box, bijectively over all tuples.
Partition rho(const StrictTuple& tuple);

/// Strict tuple attached to a Schubert label a of H*(G_{n,ell-n}):
/// t_i = ell + 1 - (a_{n+1-i} + (n+1-i)).  Satisfies: rho(tau(a)) equals the
/// reversed entry sequence of a, read as a partition.
StrictTuple tau(const SchubertIndex& a);
SchubertIndex tau_inv(const StrictTuple& tuple);

/// Complementary tuple for a label a of H*(G_{ell-n,n}): delete the shifted
/// entries a_i + i from {1..ell} and keep what remains.
StrictTuple tau_hat(const SchubertIndex& a);
SchubertIndex tau_hat_inv(const StrictTuple& tuple);

// --- strips and enumeration ------------------------------------------------

/// Partitions obtained from `shape` by adding `boxes` boxes with no two in a
/// single column, using at most `rows` rows; ascending lexicographic order.
std::vector<Partition> tensor_row(const Partition& shape, int boxes, int rows);

/// Same with no two added boxes in a single row.
std::vector<Partition> tensor_col(const Partition& shape, int boxes, int rows);

/// All partitions fitting in a rows x cols box, ascending lexicographic.
std::vector<Partition> partitions_in_box(int rows, int cols);

/// All strict tuples for (ell, n), ascending lexicographic on entries.
std::vector<StrictTuple> all_strict_tuples(int ell, int n);

/// All Schubert labels for H*(G_{k,cap}), ascending lexicographic on entries.
std::vector<SchubertIndex> all_schubert_indices(int k, int cap);

/// All masks with `marked` of `ell` slots set, ordered like their theta images.
std::vector<MultipartitionMask> all_masks(int ell, int marked);

/// All of S_n, ascending lexicographic on one-line notation.
std::vector<Permutation> all_permutations(int n);

// --- nil-Coxeter layer ------------------------------------------------------

/// Length-additive product: u.compose(v) when len(u) + len(v) = len(uv),
/// nothing otherwise (the product is the zero of the nil-Coxeter monoid).
std::optional<Permutation> nilcoxeter_mul(const Permutation& u, const Permutation& v);

/// Canonical reduced word for w: repeatedly locate the smallest descent
/// position i (w(i) > w(i+1)), record it, and shorten by the swap.  Evaluating
/// the letters left to right reproduces w; the length equals the inversion
/// count.  Empty for the identity.
std::vector<int> reduced_word(const Permutation& w);

} // namespace nilschur
