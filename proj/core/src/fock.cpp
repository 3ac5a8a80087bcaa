#include "quiverpath/fock.hpp"

namespace quiverpath {

FockVector FockVector::basis(const YoungDiagram& y) {
  FockVector v;
  v.terms_.emplace(y, 1);
  return v;
}

mpq_class FockVector::coeff(const YoungDiagram& y) const {
  auto it = terms_.find(y);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void FockVector::add(const YoungDiagram& y, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(y, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FockVector& FockVector::operator+=(const FockVector& rhs) {
  for (const auto& [y, c] : rhs.terms_) add(y, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& rhs) {
  for (const auto& [y, c] : rhs.terms_) add(y, -c);
  return *this;
}

FockVector& FockVector::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [y, coeff] : terms_) coeff *= c;
  return *this;
}

FockVector f_op(long long k, const FockVector& v) {
  FockVector out;
  for (const auto& [y, c] : v.terms())
    if (auto grown = y.with_box_of_content(k)) out.add(*grown, c);
  return out;
}

FockVector e_op(long long k, const FockVector& v) {
  FockVector out;
  for (const auto& [y, c] : v.terms())
    if (auto shrunk = y.without_box_of_content(k)) out.add(*shrunk, c);
  return out;
}

static long long weight_entry(const DimVector& contents, long long k) {
  long long u = (k == 0) ? 1 : 0;
  return u - 2 * contents.at(k) + contents.at(k - 1) + contents.at(k + 1);
}

FockVector h_op(long long k, const FockVector& v) {
  FockVector out;
  for (const auto& [y, c] : v.terms())
    out.add(y, c * mpq_class(static_cast<long>(
                      weight_entry(dim_vector_level1(y, std::nullopt), k))));
  return out;
}

std::map<long long, long long> weight_inf(const YoungDiagram& y) {
  DimVector contents = dim_vector_level1(y, std::nullopt);
  std::map<long long, long long> u;
  auto put = [&](long long k) {
    long long e = weight_entry(contents, k);
    if (e != 0) u[k] = e;
  };
  put(0);
  // Entries vanish outside the content range widened by one.
  for (const auto& [k, count] : contents.support()) {
    put(k - 1);
    put(k);
    put(k + 1);
  }
  return u;
}

}  // namespace quiverpath
