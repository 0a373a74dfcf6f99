#include "cosym/cw_homology.hpp"

#include "cosym/exact_linear_algebra.hpp"

#include <bit>
#include <sstream>

namespace cosym {
namespace {

constexpr std::uint8_t kQuaternionMask = 0x0F;
constexpr std::uint8_t kFlatMask = 0x70;

}  // namespace

// --- Cell ----------------------------------------------------------------------

Cell Cell::from_labels(std::initializer_list<int> labels) { return from_labels(std::vector<int>(labels)); }

Cell Cell::from_labels(const std::vector<int>& labels) {
  std::uint8_t mask = 0;
  for (int l : labels) {
    if (l < 1 || l > 7) throw std::invalid_argument("cell label outside 1..7: " + std::to_string(l));
    const auto bit = static_cast<std::uint8_t>(1u << (l - 1));
    if (mask & bit) throw std::invalid_argument("repeated cell label " + std::to_string(l));
    mask |= bit;
  }
  return Cell(mask);
}

int Cell::dimension() const { return std::popcount(mask_); }

std::vector<int> Cell::labels() const {
  std::vector<int> out;
  for (int l = 1; l <= 7; ++l) {
    if (contains(l)) out.push_back(l);
  }
  return out;
}

std::string Cell::name() const {
  std::string out = "{";
  for (int l : labels()) {
    if (out.size() > 1) out += ',';
    out += std::to_string(l);
  }
  return out + "}";
}

bool operator<(Cell a, Cell b) {
  if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
  const unsigned diff = a.mask_ ^ b.mask_;
  if (diff == 0) return false;
  return (a.mask_ & (diff & (~diff + 1u))) != 0;
}

// --- TwistMap --------------------------------------------------------------------

TwistMap::TwistMap(std::array<Image, 4> images) : images_(images) {
  unsigned seen = 0;
  for (const auto& im : images_) {
    if (im.label < 1 || im.label > 4 || (im.sign != 1 && im.sign != -1)) {
      throw std::invalid_argument("twist image must be +-(label in 1..4)");
    }
    seen |= 1u << (im.label - 1);
  }
  if (seen != 0x0F) throw std::invalid_argument("twist images must permute 1..4");
}

TwistMap TwistMap::right_multiplication_by_i() {
  // 1 i = i, i i = -1, j i = -k, k i = j
  return TwistMap({Image{2, 1}, Image{1, -1}, Image{4, -1}, Image{3, 1}});
}

TwistMap TwistMap::identity() { return TwistMap({Image{1, 1}, Image{2, 1}, Image{3, 1}, Image{4, 1}}); }

TwistMap::Image TwistMap::operator()(int label) const {
  if (label < 1 || label > 4) throw std::out_of_range("twist acts on labels 1..4");
  return images_[label - 1];
}

TwistMap TwistMap::inverse() const {
  std::array<Image, 4> inv{};
  for (int l = 1; l <= 4; ++l) {
    const Image im = images_[l - 1];
    inv[im.label - 1] = Image{l, im.sign};
  }
  return TwistMap(inv);
}

TwistMap TwistMap::then(const TwistMap& next) const {
  std::array<Image, 4> out{};
  for (int l = 1; l <= 4; ++l) {
    const Image first = images_[l - 1];
    const Image second = next(first.label);
    out[l - 1] = Image{second.label, first.sign * second.sign};
  }
  return TwistMap(out);
}

TwistMap TwistMap::power(int k) const {
  if (k < 0) return inverse().power(-k);
  TwistMap out = identity();
  for (int i = 0; i < k; ++i) out = out.then(*this);
  return out;
}

int TwistMap::determinant() const {
  int sign = 1;
  for (int a = 0; a < 4; ++a) {
    sign *= images_[a].sign;
    for (int b = a + 1; b < 4; ++b) {
      if (images_[a].label > images_[b].label) sign = -sign;
    }
  }
  return sign;
}

TwistMap TwistMap::with_sign_flip(int label) const {
  if (label < 1 || label > 4) throw std::out_of_range("twist acts on labels 1..4");
  TwistMap out = *this;
  out.images_[label - 1].sign *= -1;
  return out;
}

std::pair<int, std::uint8_t> TwistMap::apply_to_labels(std::uint8_t quaternion_mask) const {
  int sign = 1;
  std::uint8_t mask = 0;
  std::vector<int> targets;
  for (int l = 1; l <= 4; ++l) {
    if (!((quaternion_mask >> (l - 1)) & 1u)) continue;
    const Image im = images_[l - 1];
    sign *= im.sign;
    mask |= static_cast<std::uint8_t>(1u << (im.label - 1));
    targets.push_back(im.label);
  }
  for (std::size_t a = 0; a < targets.size(); ++a) {
    for (std::size_t b = a + 1; b < targets.size(); ++b) {
      if (targets[a] > targets[b]) sign = -sign;
    }
  }
  return {sign, mask};
}

bool operator==(const TwistMap& a, const TwistMap& b) {
  for (int l = 0; l < 4; ++l) {
    if (a.images_[l].label != b.images_[l].label || a.images_[l].sign != b.images_[l].sign) return false;
  }
  return true;
}

// --- ChainComplexZ -----------------------------------------------------------------

ChainComplexZ::ChainComplexZ(const TwistMap& twist) : twist_(twist) {}

ChainComplexZ ChainComplexZ::build(const TwistMap& twist) {
  ChainComplexZ c(twist);
  for (unsigned mask = 0; mask < 128; ++mask) {
    const Cell cell = Cell::from_mask(static_cast<std::uint8_t>(mask));
    c.cells_[cell.dimension()].push_back(cell);
  }
  for (auto& list : c.cells_) std::sort(list.begin(), list.end());
  for (int k = 1; k <= kTop; ++k) {
    IntMatrix d = IntMatrix::Zero(static_cast<Eigen::Index>(c.cells_[k - 1].size()),
                                  static_cast<Eigen::Index>(c.cells_[k].size()));
    for (std::size_t col = 0; col < c.cells_[k].size(); ++col) {
      for (const auto& [face, coefficient] : c.boundary(c.cells_[k][col])) {
        d(c.index_of(face), static_cast<Eigen::Index>(col)) = coefficient;
      }
    }
    c.boundary_[k] = std::move(d);
  }
  if (auto bad = c.boundary_squared_witness()) {
    throw BoundaryError(bad->first, bad->second, "boundary of boundary of " + bad->first.name() + " is nonzero at " +
                                                     bad->second.name());
  }
  return c;
}

int ChainComplexZ::index_of(Cell c) const {
  const auto& list = cells_.at(c.dimension());
  const auto it = std::lower_bound(list.begin(), list.end(), c);
  if (it == list.end() || !(*it == c)) throw std::out_of_range("cell not in complex");
  return static_cast<int>(it - list.begin());
}

Chain ChainComplexZ::boundary(Cell s) const {
  Chain out;
  auto add = [&out](Cell c, int v) {
    auto& slot = out[c];
    slot += v;
    if (slot == 0) out.erase(c);
  };
  const TwistMap crossing = twist_.inverse();
  int position = 0;
  for (int label : s.labels()) {
    ++position;
    const int sign = position % 2 == 1 ? 1 : -1;
    const Cell rest = Cell::from_mask(static_cast<std::uint8_t>(s.mask() & ~(1u << (label - 1))));
    if (label <= 4) continue;  // opposite torus faces are the same oriented cell
    const auto [twist_sign, quaternion] = crossing.apply_to_labels(rest.mask() & kQuaternionMask);
    const Cell far = Cell::from_mask(static_cast<std::uint8_t>(quaternion | (rest.mask() & kFlatMask)));
    add(far, sign * twist_sign);
    add(rest, -sign);
  }
  return out;
}

BigInt ChainComplexZ::degree(Cell s, Cell t) const {
  const Chain d = boundary(s);
  const auto it = d.find(t);
  return it == d.end() ? BigInt(0) : it->second;
}

std::optional<std::pair<Cell, Cell>> ChainComplexZ::boundary_squared_witness() const {
  for (int k = 2; k <= kTop; ++k) {
    const IntMatrix dd = boundary_[k - 1] * boundary_[k];
    for (Eigen::Index j = 0; j < dd.cols(); ++j) {
      for (Eigen::Index i = 0; i < dd.rows(); ++i) {
        if (dd(i, j) != 0) return std::make_pair(cells_[k][j], cells_[k - 2][i]);
      }
    }
  }
  return std::nullopt;
}

std::string to_triples(const IntMatrix& m) {
  std::ostringstream out;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (m(i, j) != 0) out << i << ' ' << j << ' ' << m(i, j) << '\n';
    }
  }
  return out.str();
}

// --- homology ----------------------------------------------------------------------

HomologyResult homology(const ChainComplexZ& complex, Coefficients coefficients) {
  constexpr int top = ChainComplexZ::kTop;
  HomologyResult r;
  r.coefficients = coefficients;
  r.boundary_ranks.assign(top + 2, 0);
  r.torsion.assign(top + 1, {});
  for (int k = 0; k <= top; ++k) r.chain_ranks.push_back(static_cast<int>(complex.cells(k).size()));
  for (int k = 1; k <= top; ++k) {
    const IntMatrix& d = complex.boundary_matrix(k);
    if (coefficients == Coefficients::integer) {
      const SmithResult snf = smith_normal_form(d);
      r.boundary_ranks[k] = snf.rank();
      r.torsion[k - 1] = snf.torsion();
    } else {
      r.boundary_ranks[k] = exact_rank(MatrixX<Rational>(d.cast<Rational>()));
    }
  }
  for (int k = 0; k <= top; ++k) {
    r.betti.push_back(r.chain_ranks[k] - r.boundary_ranks[k] - r.boundary_ranks[k + 1]);
  }
  return r;
}

HorizontalBettiSequence invariant_cohomology_oracle(const TwistMap& twist) {
  std::vector<Count> fixed;
  for (int k = 0; k <= 4; ++k) {
    std::vector<std::uint8_t> subsets;
    for (unsigned m = 0; m < 16; ++m) {
      if (std::popcount(m) == k) subsets.push_back(static_cast<std::uint8_t>(m));
    }
    const auto size = static_cast<Eigen::Index>(subsets.size());
    MatrixX<Rational> action = MatrixX<Rational>::Zero(size, size);
    for (Eigen::Index col = 0; col < size; ++col) {
      const auto [sign, image] = twist.apply_to_labels(subsets[col]);
      const auto row = std::find(subsets.begin(), subsets.end(), image) - subsets.begin();
      action(row, col) = Rational(sign);
    }
    const MatrixX<Rational> shifted = action - MatrixX<Rational>::Identity(size, size);
    fixed.push_back(size - exact_rank(shifted));
  }
  return HorizontalBettiSequence(1, fixed);
}

CrossCheckResult cross_check(const HomologyResult& h, const HorizontalBettiSequence& oracle) {
  CrossCheckResult r;
  r.from_homology = h.betti_sequence();
  r.from_oracle = betti_from_horizontal(oracle);
  const int top = std::max(r.from_homology.top_degree(), r.from_oracle.top_degree());
  for (int k = 0; k <= top; ++k) {
    if (r.from_homology.at(k) != r.from_oracle.at(k)) {
      r.first_difference = k;
      break;
    }
  }
  const Count b2 = r.from_homology.at(2);
  r.not_torus = b2 != PoincareSeries::binomial_power(7).at(2);
  r.not_k3_product = b2 != series_product(PoincareSeries({1, 0, 22, 0, 1}), PoincareSeries::binomial_power(3)).at(2);
  return r;
}

}  // namespace cosym
