#include "quiverpath/quiverlab.hpp"

#include <random>
#include <stdexcept>
#include <utility>

namespace quiverpath {

namespace {

long long floor_mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

std::vector<mpq_class> flattened(const RatMatrix& m) {
  std::vector<mpq_class> out;
  out.reserve(static_cast<size_t>(m.rows() * m.cols()));
  for (long long r = 0; r < m.rows(); ++r)
    for (long long c = 0; c < m.cols(); ++c) out.push_back(m.at(r, c));
  return out;
}

// Unknown vector layout for the up maps: one row-major block per window
// vertex, empty shapes contributing nothing.
struct UpLayout {
  std::vector<long long> start;
  long long total = 0;
};

UpLayout up_layout(const QuiverRep& x) {
  UpLayout lay;
  for (long long v = x.window_lo(); v <= x.window_hi(); ++v) {
    lay.start.push_back(lay.total);
    lay.total += x.up(v).rows() * x.up(v).cols();
  }
  return lay;
}

// Linear system expressing that the moment map of down + up vanishes; with
// the down part fixed this is exactly orthogonality of the up part to the
// base-change orbit directions of the down part.  Row block j lists the
// entries of psi_j, column blocks follow lay.
RatMatrix conormal_constraints(const QuiverRep& x, const UpLayout& lay) {
  bool cyc = x.mode().is_cyclic();
  long long p = cyc ? x.mode().period() : 0;
  std::vector<long long> row_start;
  long long rows = 0;
  for (long long v = x.window_lo(); v <= x.window_hi(); ++v) {
    row_start.push_back(rows);
    rows += x.dim(v) * x.dim(v);
  }
  auto block_of = [&](long long vertex) {
    long long v = cyc ? floor_mod(vertex, p) : vertex;
    return row_start[v - x.window_lo()];
  };

  RatMatrix constraints(rows, lay.total);
  for (long long i = x.window_lo(); i <= x.window_hi(); ++i) {
    long long r_up = x.up(i).rows();  // dim(i+1)
    long long c_up = x.up(i).cols();  // dim(i)
    if (r_up == 0 || c_up == 0) continue;
    long long ustart = lay.start[i - x.window_lo()];
    const RatMatrix& d = x.down(i + 1);  // dim(i) x dim(i+1)
    // Unknown up_i(r, c) feeds psi_i(a, c) with weight down_{i+1}(a, r) and
    // psi_{i+1}(r, b) with weight -down_{i+1}(c, b).
    for (long long r = 0; r < r_up; ++r) {
      for (long long c = 0; c < c_up; ++c) {
        long long col = ustart + r * c_up + c;
        for (long long a = 0; a < c_up; ++a)
          constraints.at(block_of(i) + a * c_up + c, col) += d.at(a, r);
        for (long long b = 0; b < r_up; ++b)
          constraints.at(block_of(i + 1) + r * r_up + b, col) -= d.at(c, b);
      }
    }
  }
  return constraints;
}

}  // namespace

QuiverRep::QuiverRep(SegmentMode mode, const DimVector& spaces) : mode_(mode) {
  if (mode_.is_cyclic() != spaces.is_cyclic() ||
      (mode_.is_cyclic() && spaces.modulus() != mode_.period()))
    throw std::invalid_argument("spaces do not match the quiver mode");
  if (mode_.is_cyclic()) {
    lo_ = 0;
    hi_ = mode_.period() - 1;
  } else if (!spaces.support().empty()) {
    lo_ = spaces.support().begin()->first;
    hi_ = spaces.support().rbegin()->first;
  }
  for (long long v = lo_; v <= hi_; ++v) dims_.push_back(spaces.at(v));
  for (long long v = lo_; v <= hi_; ++v) {
    down_.emplace_back(dim(v - 1), dim(v));
    up_.emplace_back(dim(v + 1), dim(v));
  }
}

long long QuiverRep::dim(long long vertex) const {
  if (mode_.is_cyclic())
    return dims_[static_cast<size_t>(floor_mod(vertex, mode_.period()))];
  if (vertex < lo_ || vertex > hi_) return 0;
  return dims_[static_cast<size_t>(vertex - lo_)];
}

long long QuiverRep::total_dim() const {
  long long total = 0;
  for (long long d : dims_) total += d;
  return total;
}

DimVector QuiverRep::spaces() const {
  DimVector out = mode_.is_cyclic() ? DimVector::cyclic(mode_.rank())
                                    : DimVector::infinite();
  for (long long v = lo_; v <= hi_; ++v)
    out.add(v, dims_[static_cast<size_t>(v - lo_)]);
  return out;
}

size_t QuiverRep::index(long long vertex) const {
  if (mode_.is_cyclic())
    return static_cast<size_t>(floor_mod(vertex, mode_.period()));
  if (vertex < lo_ || vertex > hi_)
    throw std::out_of_range("vertex outside window");
  return static_cast<size_t>(vertex - lo_);
}

const RatMatrix& QuiverRep::down(long long vertex) const {
  return down_[index(vertex)];
}
RatMatrix& QuiverRep::down(long long vertex) { return down_[index(vertex)]; }
const RatMatrix& QuiverRep::up(long long vertex) const {
  return up_[index(vertex)];
}
RatMatrix& QuiverRep::up(long long vertex) { return up_[index(vertex)]; }

bool QuiverRep::up_is_zero() const {
  for (const RatMatrix& m : up_)
    if (!m.is_zero()) return false;
  return true;
}

bool MomentValue::is_zero() const {
  for (const auto& [vertex, block] : psi)
    if (!block.is_zero()) return false;
  return true;
}

QuiverRep build_rep(const SegmentMultiset& f) {
  QuiverRep rep(f.mode(), dim_vector(f));
  auto vertex_of = [&](long long r) {
    return f.mode().is_cyclic() ? floor_mod(r, f.mode().period()) : r;
  };
  std::map<long long, long long> next_slot;
  for (const auto& [seg, mult] : f.support()) {
    for (long long copy = 0; copy < mult; ++copy) {
      long long prev_slot = 0;
      for (long long r = seg.lo; r <= seg.hi; ++r) {
        long long slot = next_slot[vertex_of(r)]++;
        if (r > seg.lo) rep.down(vertex_of(r)).at(prev_slot, slot) = 1;
        prev_slot = slot;
      }
    }
  }
  return rep;
}

MomentValue moment_map(const QuiverRep& x) {
  bool cyc = x.mode().is_cyclic();
  MomentValue out;
  for (long long v = x.window_lo(); v <= x.window_hi(); ++v) {
    RatMatrix block(x.dim(v), x.dim(v));
    if (cyc || v + 1 <= x.window_hi()) block += x.down(v + 1) * x.up(v);
    if (cyc || v - 1 >= x.window_lo()) block -= x.up(v - 1) * x.down(v);
    out.psi.emplace(v, std::move(block));
  }
  return out;
}

bool is_nilpotent(const QuiverRep& x, long long max_len) {
  if (max_len < 1) throw std::invalid_argument("product length must be positive");
  long long total = x.total_dim();
  if (total == 0) return true;

  std::vector<long long> offset;
  long long acc = 0;
  for (long long v = x.window_lo(); v <= x.window_hi(); ++v) {
    offset.push_back(acc);
    acc += x.dim(v);
  }
  auto offset_of = [&](long long vertex) {
    long long v = x.mode().is_cyclic() ? floor_mod(vertex, x.mode().period())
                                       : vertex;
    return offset[static_cast<size_t>(v - x.window_lo())];
  };

  std::vector<RatMatrix> gens;
  auto embed = [&](const RatMatrix& m, long long src, long long dst) {
    if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) return;
    RatMatrix g(total, total);
    long long ro = offset_of(dst);
    long long co = offset_of(src);
    for (long long r = 0; r < m.rows(); ++r)
      for (long long c = 0; c < m.cols(); ++c) g.at(ro + r, co + c) = m.at(r, c);
    gens.push_back(std::move(g));
  };
  for (long long v = x.window_lo(); v <= x.window_hi(); ++v) {
    embed(x.down(v), v, v - 1);
    embed(x.up(v), v, v + 1);
  }

  // level holds a basis of the span of all length-len products.
  std::vector<RatMatrix> level;
  {
    RowSpan span(total * total);
    for (const RatMatrix& g : gens)
      if (span.insert(flattened(g))) level.push_back(g);
  }
  for (long long len = 1; len < max_len && !level.empty(); ++len) {
    RowSpan span(total * total);
    std::vector<RatMatrix> next;
    for (const RatMatrix& g : gens) {
      for (const RatMatrix& w : level) {
        RatMatrix prod = g * w;
        if (span.insert(flattened(prod))) next.push_back(std::move(prod));
      }
    }
    level = std::move(next);
  }
  return level.empty();
}

QuiverRep conormal_sample(const QuiverRep& x_omega, std::uint64_t seed) {
  if (!x_omega.up_is_zero())
    throw std::invalid_argument("reverse maps must start at zero");
  UpLayout lay = up_layout(x_omega);
  auto basis = null_space(conormal_constraints(x_omega, lay));

  std::mt19937_64 rng(seed);
  std::vector<mpq_class> u(static_cast<size_t>(lay.total), mpq_class(0));
  for (const auto& b : basis) {
    long long num = 1 + static_cast<long long>(rng() % 19);
    if (rng() & 1) num = -num;
    long long den = 1 + static_cast<long long>(rng() % 4);
    mpq_class coeff(static_cast<long>(num), static_cast<long>(den));
    coeff.canonicalize();
    for (size_t i = 0; i < u.size(); ++i) u[i] += coeff * b[i];
  }

  QuiverRep out = x_omega;
  for (long long v = out.window_lo(); v <= out.window_hi(); ++v) {
    RatMatrix& m = out.up(v);
    long long ustart = lay.start[static_cast<size_t>(v - out.window_lo())];
    for (long long r = 0; r < m.rows(); ++r)
      for (long long c = 0; c < m.cols(); ++c)
        m.at(r, c) = u[static_cast<size_t>(ustart + r * m.cols() + c)];
  }
  return out;
}

long long conormal_dimension(const QuiverRep& x_omega) {
  if (!x_omega.up_is_zero())
    throw std::invalid_argument("reverse maps must start at zero");
  UpLayout lay = up_layout(x_omega);
  return lay.total - rank(conormal_constraints(x_omega, lay));
}

bool stability_test(const QuiverRep& x, const DimVector& w) {
  if (w.is_cyclic() != x.mode().is_cyclic() ||
      (w.is_cyclic() && w.modulus() != x.mode().period()))
    throw std::invalid_argument("framing does not match the quiver mode");
  for (long long v = x.window_lo(); v <= x.window_hi(); ++v) {
    const RatMatrix& d = x.down(v);
    const RatMatrix& u = x.up(v);
    RatMatrix stacked(d.rows() + u.rows(), x.dim(v));
    for (long long r = 0; r < d.rows(); ++r)
      for (long long c = 0; c < d.cols(); ++c) stacked.at(r, c) = d.at(r, c);
    for (long long r = 0; r < u.rows(); ++r)
      for (long long c = 0; c < u.cols(); ++c)
        stacked.at(d.rows() + r, c) = u.at(r, c);
    if (x.dim(v) - rank(stacked) > w.at(v)) return false;
  }
  return true;
}

}  // namespace quiverpath
