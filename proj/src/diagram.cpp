#include "gtwidth/diagram.hpp"

#include <algorithm>
#include <sstream>

namespace gtwidth {

namespace {

Rational abs_val(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace

Diagram Diagram::build(const Weight& w) {
  if (is_point_orbit(w))
    throw PointOrbitError("the orbit through this weight of " + w.group.name() +
                          " is a point; it has no diagram");
  Diagram d;
  d.weight_ = w;
  d.blocks_ = block_structure(w);
  const int n = w.n();
  const bool ortho = w.group.is_orthogonal();
  const bool odd = w.group.family == GroupFamily::OddOrthogonal;
  const bool last_zero = (d.blocks_.values.back() == 0);

  for (int j = 1; j <= n; ++j) {
    // First quadrant: the ladder rule. The function at (j,k) is squeezed
    // into [|l(n-k+1)|, lj]; it is a box iff that interval is nondegenerate.
    for (int k = 1; j + k <= n; ++k) {
      Rational bound = w.at(n - k + 1);
      if (ortho) bound = abs_val(bound);
      if (!(w.at(j) > bound)) break;  // the bound only grows with k
      BoxInfo info;
      info.box = {j, k};
      info.level = ortho ? (odd ? n + j + k : n + j + k - 1) : j + k - 1;
      info.index = j;
      info.lo = bound;
      info.hi = w.at(j);
      d.boxes_.push_back(std::move(info));
    }
    if (!ortho) continue;
    // Fourth quadrant. When ln = 0 every function below the last diagonal
    // square is identically zero and its boxes are removed.
    if (last_zero && d.blocks_.block_of(j) == d.blocks_.m + 1) continue;
    const int kmin = odd ? j - n : j - n + 1;
    for (int k = kmin; k <= 0; ++k) {
      BoxInfo info;
      info.box = {j, k};
      info.level = odd ? n + j + k : n + j + k - 1;
      info.index = j;
      info.hi = w.at(j);
      info.lo = (k == kmin) ? Rational(-w.at(j)) : Rational(0);
      d.boxes_.push_back(std::move(info));
    }
  }

  auto precedes = [&](const BoxInfo& a, const BoxInfo& b) {
    if (ortho) {
      if (a.box.j != b.box.j) return a.box.j < b.box.j;
      return a.box.k > b.box.k;
    }
    if (a.box.k != b.box.k) return a.box.k < b.box.k;
    return a.box.j > b.box.j;
  };
  std::sort(d.boxes_.begin(), d.boxes_.end(), precedes);
  for (int i = 0; i < static_cast<int>(d.boxes_.size()); ++i)
    d.index_.emplace(d.boxes_[i].box, i);
  return d;
}

int Diagram::basis_index(Box b) const {
  auto it = index_.find(b);
  if (it == index_.end())
    throw std::out_of_range("unknown box (" + std::to_string(b.j) + "," +
                            std::to_string(b.k) + ")");
  return it->second;
}

int Diagram::g_of(int l) const {
  const int n = weight_.n();
  if (l < 1 || l > n) throw std::out_of_range("row/column index out of range");
  if (group().is_orthogonal()) return blocks_.block_of(l);
  return blocks_.block_of(n - l + 1);
}

bool Diagram::slot_exists(int j, int k) const {
  const int n = weight_.n();
  if (j < 1 || j > n) return false;
  if (j + k > n + 1) return false;  // above the top level
  switch (group().family) {
    case GroupFamily::UnitaryU:
      return k >= 1;
    case GroupFamily::OddOrthogonal: {
      const int level = n + j + k;
      if (level < 2) return false;
      return (level % 2 == 0) ? k >= j - n : k >= j - n + 1;
    }
    case GroupFamily::EvenOrthogonal: {
      const int level = n + j + k - 1;
      if (level < 2) return false;
      return (level % 2 == 0) ? k >= j - n + 1 : k >= j - n + 2;
    }
  }
  return false;
}

bool Diagram::slot_is_rim(int j, int k) const {
  const int n = weight_.n();
  switch (group().family) {
    case GroupFamily::UnitaryU: return false;
    case GroupFamily::OddOrthogonal: return k == j - n;
    case GroupFamily::EvenOrthogonal: return k == j - n + 1;
  }
  return false;
}

std::pair<int, int> Diagram::slot_label(int j, int k) const {
  const int n = weight_.n();
  switch (group().family) {
    case GroupFamily::UnitaryU: return {j + k - 1, j};
    case GroupFamily::OddOrthogonal: return {n + j + k, j};
    case GroupFamily::EvenOrthogonal: return {n + j + k - 1, j};
  }
  return {0, 0};
}

int Diagram::k_min(int j) const {
  const int n = weight_.n();
  switch (group().family) {
    case GroupFamily::UnitaryU: return 1;
    case GroupFamily::OddOrthogonal: return j - n;
    case GroupFamily::EvenOrthogonal: return j - n + 1;
  }
  return 1;
}

int Diagram::k_max(int j) const {
  int best = k_min(j) - 1;
  for (const auto& info : boxes_)
    if (info.box.j == j) best = std::max(best, info.box.k);
  return best;
}

std::string Diagram::render_ascii() const {
  const int n = weight_.n();
  int lo = 1, hi = 1;
  for (const auto& info : boxes_) {
    lo = std::min(lo, info.box.k);
    hi = std::max(hi, info.box.k);
  }
  std::ostringstream os;
  os << group().name() << " diagram, N = " << size() << "\n";
  for (int k = hi; k >= lo; --k) {
    os << (k >= 0 ? " " : "") << k << " | ";
    for (int j = 1; j <= n; ++j) {
      if (is_box({j, k}))
        os << " X ";
      else if (slot_exists(j, k))
        os << " . ";
      else
        os << "   ";
    }
    os << "\n";
  }
  os << "     ";
  for (int j = 1; j <= n; ++j) os << " " << j << " ";
  os << "\n";
  for (const auto& info : boxes_) {
    os << "  #" << basis_index(info.box) << " (" << info.box.j << "," << info.box.k
       << ") = eig " << info.index << " of leading " << info.level << "x" << info.level
       << ", range [" << rational_str(info.lo) << ", " << rational_str(info.hi)
       << "]\n";
  }
  return os.str();
}

}  // namespace gtwidth
