#include "nilschur/combinatorics.hpp"

#include <algorithm>
#include <numeric>

#include "nilschur/errors.hpp"

namespace nilschur {

namespace {

std::string join_ints(const std::vector<int>& values, char open, char close) {
    std::string out(1, open);
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(values[i]);
    }
    out += close;
    return out;
}

} // namespace

// --- Partition --------------------------------------------------------------

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0)
            throw InvalidInput("partition part must be nonnegative");
        if (i > 0 && parts[i] > parts[i - 1])
            throw InvalidInput("partition parts must be weakly decreasing");
    }
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    parts_ = std::move(parts);
}

Partition Partition::single_row(int s) {
    if (s < 0)
        throw InvalidInput("single_row: negative part");
    return s == 0 ? Partition() : Partition({s});
}

Partition Partition::single_column(int k) {
    if (k < 0)
        throw InvalidInput("single_column: negative height");
    return Partition(std::vector<int>(static_cast<std::size_t>(k), 1));
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    if (i < 1)
        throw InvalidInput("partition part index is 1-based");
    return i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

Partition Partition::conjugate() const {
    std::vector<int> cols;
    const int width = parts_.empty() ? 0 : parts_[0];
    cols.reserve(static_cast<std::size_t>(width));
    for (int j = 1; j <= width; ++j) {
        int height = 0;
        for (int p : parts_)
            if (p >= j)
                ++height;
        cols.push_back(height);
    }
    return Partition(std::move(cols));
}

bool Partition::fits_in_box(int rows, int cols) const {
    return length() <= rows && part(1) <= cols;
}

std::string Partition::to_string() const {
    return join_ints(parts_, '(', ')');
}

// --- Permutation ------------------------------------------------------------

Permutation::Permutation(int n) {
    if (n < 0)
        throw InvalidInput("permutation size must be nonnegative");
    images_.resize(static_cast<std::size_t>(n));
    std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > n() || seen[static_cast<std::size_t>(v - 1)])
            throw InvalidInput("not a permutation of 1..n in one-line notation");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::adjacent_transposition(int n, int r) {
    if (r < 1 || r >= n)
        throw InvalidInput("adjacent transposition index out of range");
    Permutation w(n);
    std::swap(w.images_[static_cast<std::size_t>(r - 1)], w.images_[static_cast<std::size_t>(r)]);
    return w;
}

Permutation Permutation::longest_element(int n) {
    Permutation w(n);
    std::reverse(w.images_.begin(), w.images_.end());
    return w;
}

int Permutation::image(int i) const {
    if (i < 1 || i > n())
        throw InvalidInput("permutation argument out of range");
    return images_[static_cast<std::size_t>(i - 1)];
}

Permutation Permutation::compose(const Permutation& other) const {
    if (n() != other.n())
        throw InvalidInput("cannot compose permutations of different sizes");
    std::vector<int> res(images_.size());
    for (std::size_t i = 0; i < res.size(); ++i)
        res[i] = images_[static_cast<std::size_t>(other.images_[i] - 1)];
    return Permutation(std::move(res));
}

Permutation Permutation::inverse() const {
    std::vector<int> res(images_.size());
    for (std::size_t i = 0; i < res.size(); ++i)
        res[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(res));
}

int Permutation::length() const {
    int inv = 0;
    for (std::size_t i = 0; i < images_.size(); ++i)
        for (std::size_t j = i + 1; j < images_.size(); ++j)
            if (images_[i] > images_[j])
                ++inv;
    return inv;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i) + 1)
            return false;
    return true;
}

std::string Permutation::to_string() const {
    return join_ints(images_, '[', ']');
}

// --- StrictTuple ------------------------------------------------------------

StrictTuple::StrictTuple(std::vector<int> entries, int ell)
    : entries_(std::move(entries)), ell_(ell) {
    if (ell_ < 0)
        throw InvalidInput("strict tuple bound must be nonnegative");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] < 1 || entries_[i] > ell_)
            throw InvalidInput("strict tuple entry out of range 1..ell");
        if (i > 0 && entries_[i] <= entries_[i - 1])
            throw InvalidInput("strict tuple entries must strictly increase");
    }
}

int StrictTuple::entry(int i) const {
    if (i < 1 || i > n())
        throw InvalidInput("strict tuple index out of range");
    return entries_[static_cast<std::size_t>(i - 1)];
}

std::string StrictTuple::to_string() const {
    return join_ints(entries_, '(', ')');
}

// --- SchubertIndex ----------------------------------------------------------

SchubertIndex::SchubertIndex(std::vector<int> entries, int cap)
    : entries_(std::move(entries)), cap_(cap) {
    if (cap_ < 0)
        throw InvalidInput("Schubert index cap must be nonnegative");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] < 0 || entries_[i] > cap_)
            throw InvalidInput("Schubert index entry out of range 0..cap");
        if (i > 0 && entries_[i] < entries_[i - 1])
            throw InvalidInput("Schubert index entries must weakly increase");
    }
}

int SchubertIndex::entry(int i) const {
    if (i < 1 || i > k())
        throw InvalidInput("Schubert index position out of range");
    return entries_[static_cast<std::size_t>(i - 1)];
}

int SchubertIndex::weight() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

Partition SchubertIndex::to_partition() const {
    std::vector<int> parts(entries_.rbegin(), entries_.rend());
    return Partition(std::move(parts));
}

SchubertIndex SchubertIndex::from_partition(const Partition& shape, int k, int cap) {
    if (shape.length() > k || shape.part(1) > cap)
        throw InvalidInput("partition does not fit the k x cap box");
    std::vector<int> entries(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i)
        entries[static_cast<std::size_t>(i - 1)] = shape.part(k - i + 1);
    return SchubertIndex(std::move(entries), cap);
}

std::string SchubertIndex::to_string() const {
    return join_ints(entries_, '(', ')');
}

// --- MultipartitionMask -----------------------------------------------------

MultipartitionMask::MultipartitionMask(std::vector<bool> slots) : slots_(std::move(slots)) {}

int MultipartitionMask::marked_count() const {
    return static_cast<int>(std::count(slots_.begin(), slots_.end(), true));
}

bool MultipartitionMask::marked(int i) const {
    if (i < 1 || i > ell())
        throw InvalidInput("mask slot out of range");
    return slots_[static_cast<std::size_t>(i - 1)];
}

std::string MultipartitionMask::to_string() const {
    std::vector<int> bits;
    bits.reserve(slots_.size());
    for (bool b : slots_)
        bits.push_back(b ? 1 : 0);
    return join_ints(bits, '[', ']');
}

// --- bijections -------------------------------------------------------------

StrictTuple theta(const MultipartitionMask& mask) {
    std::vector<int> entries;
    for (int i = 1; i <= mask.ell(); ++i)
        if (mask.marked(i))
            entries.push_back(i);
    return StrictTuple(std::move(entries), mask.ell());
}

MultipartitionMask theta_inv(const StrictTuple& tuple) {
    std::vector<bool> slots(static_cast<std::size_t>(tuple.ell()), false);
    for (int e : tuple.entries())
        slots[static_cast<std::size_t>(e - 1)] = true;
    return MultipartitionMask(std::move(slots));
}

Partition rho(const StrictTuple& tuple) {
    const int ell = tuple.ell();
    const int n = tuple.n();
    std::vector<int> parts(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        parts[static_cast<std::size_t>(i - 1)] = ell - tuple.entry(i) - n + i;
    return Partition(std::move(parts)); // weakly decreasing because entries strictly increase
}

StrictTuple tau(const SchubertIndex& a) {
    const int ell = a.ell();
    const int n = a.k();
    std::vector<int> entries(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        entries[static_cast<std::size_t>(i - 1)] = ell + 1 - (a.entry(n + 1 - i) + (n + 1 - i));
    return StrictTuple(std::move(entries), ell);
}

SchubertIndex tau_inv(const StrictTuple& tuple) {
    const int ell = tuple.ell();
    const int n = tuple.n();
    std::vector<int> entries(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j)
        entries[static_cast<std::size_t>(j - 1)] = ell + 1 - tuple.entry(n + 1 - j) - j;
    return SchubertIndex(std::move(entries), ell - n);
}

StrictTuple tau_hat(const SchubertIndex& a) {
    const int ell = a.ell();
    std::vector<bool> removed(static_cast<std::size_t>(ell), false);
    for (int i = 1; i <= a.k(); ++i)
        removed[static_cast<std::size_t>(a.entry(i) + i - 1)] = true;
    std::vector<int> entries;
    for (int v = 1; v <= ell; ++v)
        if (!removed[static_cast<std::size_t>(v - 1)])
            entries.push_back(v);
    return StrictTuple(std::move(entries), ell);
}

SchubertIndex tau_hat_inv(const StrictTuple& tuple) {
    const int ell = tuple.ell();
    std::vector<bool> kept(static_cast<std::size_t>(ell), false);
    for (int e : tuple.entries())
        kept[static_cast<std::size_t>(e - 1)] = true;
    std::vector<int> entries;
    int position = 0;
    for (int v = 1; v <= ell; ++v)
        if (!kept[static_cast<std::size_t>(v - 1)])
            entries.push_back(v - ++position);
    return SchubertIndex(std::move(entries), tuple.n());
}

// --- strips and enumeration -------------------------------------------------

namespace {

void tensor_row_rec(const Partition& shape, int rows, int row, int remaining,
                    std::vector<int>& prefix, std::vector<Partition>& out) {
    if (row > rows) {
        if (remaining == 0)
            out.push_back(Partition(prefix));
        return;
    }
    const int base = shape.part(row);
    // No two added boxes share a column: mu_row may not exceed the previous
    // row of the original shape (rows after the first).
    int hi = row == 1 ? base + remaining : std::min(shape.part(row - 1), base + remaining);
    for (int v = base; v <= hi; ++v) {
        prefix.push_back(v);
        tensor_row_rec(shape, rows, row + 1, remaining - (v - base), prefix, out);
        prefix.pop_back();
    }
}

void tensor_col_rec(const Partition& shape, int rows, int row, int remaining,
                    std::vector<int>& prefix, std::vector<Partition>& out) {
    if (row > rows) {
        if (remaining == 0)
            out.push_back(Partition(prefix));
        return;
    }
    const int base = shape.part(row);
    for (int add = 0; add <= 1; ++add) {
        if (add > remaining)
            break;
        const int v = base + add;
        if (row > 1 && v > prefix[static_cast<std::size_t>(row - 2)])
            continue; // result must stay weakly decreasing
        prefix.push_back(v);
        tensor_col_rec(shape, rows, row + 1, remaining - add, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> tensor_row(const Partition& shape, int boxes, int rows) {
    if (boxes < 0)
        throw InvalidInput("tensor_row: negative box count");
    if (rows < 0)
        throw InvalidInput("tensor_row: negative row bound");
    std::vector<Partition> out;
    if (shape.length() > rows)
        return out;
    std::vector<int> prefix;
    tensor_row_rec(shape, rows, 1, boxes, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> tensor_col(const Partition& shape, int boxes, int rows) {
    if (boxes < 0)
        throw InvalidInput("tensor_col: negative box count");
    if (rows < 0)
        throw InvalidInput("tensor_col: negative row bound");
    std::vector<Partition> out;
    if (shape.length() > rows)
        return out;
    std::vector<int> prefix;
    tensor_col_rec(shape, rows, 1, boxes, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void box_rec(int rows, int cols, int row, std::vector<int>& prefix,
             std::vector<Partition>& out) {
    if (row > rows) {
        out.push_back(Partition(prefix));
        return;
    }
    const int hi = row == 1 ? cols : prefix[static_cast<std::size_t>(row - 2)];
    for (int v = 0; v <= hi; ++v) {
        prefix.push_back(v);
        box_rec(rows, cols, row + 1, prefix, out);
        prefix.pop_back();
    }
}

void tuples_rec(int ell, int n, int index, std::vector<int>& prefix,
                std::vector<StrictTuple>& out) {
    if (index > n) {
        out.push_back(StrictTuple(prefix, ell));
        return;
    }
    const int lo = index == 1 ? 1 : prefix[static_cast<std::size_t>(index - 2)] + 1;
    for (int v = lo; v <= ell - (n - index); ++v) {
        prefix.push_back(v);
        tuples_rec(ell, n, index + 1, prefix, out);
        prefix.pop_back();
    }
}

void indices_rec(int k, int cap, int index, std::vector<int>& prefix,
                 std::vector<SchubertIndex>& out) {
    if (index > k) {
        out.push_back(SchubertIndex(prefix, cap));
        return;
    }
    const int lo = index == 1 ? 0 : prefix[static_cast<std::size_t>(index - 2)];
    for (int v = lo; v <= cap; ++v) {
        prefix.push_back(v);
        indices_rec(k, cap, index + 1, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_in_box(int rows, int cols) {
    if (rows < 0 || cols < 0)
        throw InvalidInput("partitions_in_box: negative dimensions");
    std::vector<Partition> out;
    std::vector<int> prefix;
    box_rec(rows, cols, 1, prefix, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<StrictTuple> all_strict_tuples(int ell, int n) {
    if (n < 0 || ell < 0 || n > ell)
        throw InvalidInput("all_strict_tuples: need 0 <= n <= ell");
    std::vector<StrictTuple> out;
    std::vector<int> prefix;
    tuples_rec(ell, n, 1, prefix, out);
    return out;
}

std::vector<SchubertIndex> all_schubert_indices(int k, int cap) {
    if (k < 0 || cap < 0)
        throw InvalidInput("all_schubert_indices: negative dimensions");
    std::vector<SchubertIndex> out;
    std::vector<int> prefix;
    indices_rec(k, cap, 1, prefix, out);
    return out;
}

std::vector<MultipartitionMask> all_masks(int ell, int marked) {
    std::vector<MultipartitionMask> out;
    for (const auto& tuple : all_strict_tuples(ell, marked))
        out.push_back(theta_inv(tuple));
    return out;
}

std::vector<Permutation> all_permutations(int n) {
    if (n < 0)
        throw InvalidInput("all_permutations: negative size");
    std::vector<int> line(static_cast<std::size_t>(n));
    std::iota(line.begin(), line.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(line));
    } while (std::next_permutation(line.begin(), line.end()));
    return out;
}

// --- nil-Coxeter layer -------------------------------------------------------

std::optional<Permutation> nilcoxeter_mul(const Permutation& u, const Permutation& v) {
    Permutation w = u.compose(v);
    if (w.length() != u.length() + v.length())
        return std::nullopt;
    return w;
}

std::vector<int> reduced_word(const Permutation& w) {
    std::vector<int> line = w.one_line();
    std::vector<int> word;
    bool found = true;
    while (found) {
        found = false;
        for (std::size_t i = 0; i + 1 < line.size(); ++i) {
            if (line[i] > line[i + 1]) {
                std::swap(line[i], line[i + 1]);
                word.push_back(static_cast<int>(i) + 1);
                found = true;
                break;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

} // namespace nilschur
