#include "kostka/multiplicity.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "kostka/bzgeom.hpp"

namespace kostka {

size_t PartitionMemo::KeyHash::operator()(const Key& k) const {
  // FNV-1a over the packed entries.
  size_t h = 1469598103934665603ull;
  for (int16_t x : k.v) {
    h ^= static_cast<uint16_t>(x);
    h *= 1099511628211ull;
  }
  return h;
}

PartitionMemo::PartitionMemo(const RootDatum& datum) : datum_(&datum), rank_(datum.rank()) {
  if (rank_ > 6) throw RankCapError("partition memo supports rank <= 6");
  for (const auto& root : datum.positive_roots()) {
    auto co = datum.simple_root_coords(root);
    std::vector<long> v(rank_);
    for (int i = 0; i < rank_; ++i) {
      if (co.c[i].get_den() != 1) throw std::logic_error("positive root with fractional coordinates");
      v[i] = static_cast<long>(co.c[i].get_num().get_si());
    }
    root_coords_.push_back(std::move(v));
  }
  std::sort(root_coords_.begin(), root_coords_.end());
}

Int PartitionMemo::count(const Vec& v) {
  auto co = datum_->simple_root_coords(v);
  if (!co.in_span) return 0;
  std::vector<long> coords(rank_);
  for (int i = 0; i < rank_; ++i) {
    if (co.c[i].get_den() != 1 || co.c[i] < 0) return 0;
    coords[i] = static_cast<long>(co.c[i].get_num().get_si());
  }
  return count_coords(coords);
}

Int PartitionMemo::count_coords(const std::vector<long>& coords) {
  std::array<int16_t, 7> t{};
  for (int i = 0; i < rank_; ++i) {
    if (coords[i] < 0) return 0;
    if (coords[i] > 30000) throw std::overflow_error("partition target too large");
    t[i] = static_cast<int16_t>(coords[i]);
  }
  return count_rec(static_cast<int>(root_coords_.size()), t);
}

Int PartitionMemo::count_rec(int prefix, std::array<int16_t, 7>& target) {
  bool zero = true;
  for (int i = 0; i < rank_; ++i)
    if (target[i] != 0) {
      zero = false;
      break;
    }
  if (zero) return 1;
  if (prefix == 0) return 0;

  Key key;
  key.v = target;
  key.v[6] = static_cast<int16_t>(prefix);
  auto it = table_.find(key);
  if (it != table_.end()) return it->second;

  const auto& root = root_coords_[prefix - 1];
  Int total = count_rec(prefix - 1, target);
  std::array<int16_t, 7> t = target;
  for (;;) {
    bool ok = true;
    for (int i = 0; i < rank_; ++i) {
      t[i] = static_cast<int16_t>(t[i] - root[i]);
      if (t[i] < 0) ok = false;
    }
    if (!ok) break;
    total += count_rec(prefix - 1, t);
  }
  table_.emplace(key, total);
  return total;
}

Int kostant_partition(const RootDatum& datum, const Vec& v) {
  PartitionMemo memo(datum);
  return memo.count(v);
}

Int kostka_kostant(const RootDatum& datum, const Vec& lambda, const Vec& mu,
                   PartitionMemo* memo, int rank_cap) {
  std::optional<PartitionMemo> local;
  if (!memo) local.emplace(datum);
  PartitionMemo& m = memo ? *memo : *local;
  const auto& weyl = datum.weyl_group(rank_cap);
  Vec lr = vec_add(lambda, datum.rho());
  Vec mr = vec_add(mu, datum.rho());
  Int total = 0;
  for (const auto& w : weyl) {
    Vec v = vec_sub(w.apply(lr), mr);
    Int p = m.count(v);
    if (p == 0) continue;
    if (w.det > 0)
      total += p;
    else
      total -= p;
  }
  if (total < 0) throw std::logic_error("negative multiplicity from the Weyl sum");
  return total;
}

namespace {

// Backtracking SSYT filler. Cells in row-major order; row entries weakly
// increase, column entries strictly increase, rem tracks unused content.
struct SsytCounter {
  const std::vector<long>& shape;
  int alphabet;
  std::vector<long> rem;
  std::vector<std::vector<int>> cell;  // filled values
  Int total = 0;

  void fill(size_t row, size_t col) {
    if (row == shape.size()) {
      ++total;
      return;
    }
    size_t nrow = row, ncol = col + 1;
    if (static_cast<long>(ncol) >= shape[row]) {
      nrow = row + 1;
      ncol = 0;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, cell[row][col - 1]);
    if (row > 0 && static_cast<long>(col) < shape[row - 1]) lo = std::max(lo, cell[row - 1][col] + 1);
    for (int v = lo; v <= alphabet; ++v) {
      if (rem[v - 1] == 0) continue;
      --rem[v - 1];
      cell[row][col] = v;
      fill(nrow, ncol);
      ++rem[v - 1];
    }
  }
};

}  // namespace

Int kostka_ssyt(const std::vector<long>& shape_in, const std::vector<long>& content) {
  std::vector<long> shape = shape_in;
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  long total_shape = 0;
  for (size_t i = 0; i < shape.size(); ++i) {
    if (shape[i] <= 0 || (i > 0 && shape[i] > shape[i - 1]))
      throw std::invalid_argument("shape must be a partition");
    total_shape += shape[i];
  }
  long total_content = 0;
  for (long c : content) {
    if (c < 0) throw std::invalid_argument("content entries must be nonnegative");
    total_content += c;
  }
  if (total_shape != total_content)
    throw std::invalid_argument("shape and content must have equal size");
  if (shape.empty()) return 1;
  if (shape.size() > content.size()) return 0;

  SsytCounter counter{shape, static_cast<int>(content.size()), content, {}, 0};
  for (long row_len : shape) counter.cell.emplace_back(static_cast<size_t>(row_len), 0);
  counter.fill(0, 0);
  return counter.total;
}

std::vector<Int> stretched_samples(const RootSystem& rs, const Vec& lambda,
                                   const Vec& mu, int n_max, Method method) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (method == Method::Auto)
    method = (rs.type() == Type::A || rs.type() == Type::G2) ? Method::Kostant : Method::BZ;
  std::vector<Int> out;
  out.reserve(n_max);
  PartitionMemo memo(rs.datum());
  for (int n = 1; n <= n_max; ++n) {
    Vec ln = vec_scale(Rat(n), lambda);
    Vec mn = vec_scale(Rat(n), mu);
    if (method == Method::BZ)
      out.push_back(count_integral_patterns(rs, ln, mn));
    else
      out.push_back(kostka_kostant(rs, ln, mn, &memo));
  }
  return out;
}

}  // namespace kostka
