#ifndef FRAGWL_ORDINAL_HPP
#define FRAGWL_ORDINAL_HPP

#include <map>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "fragwl/fragmentation.hpp"

namespace fragwl {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Per-class embedding e and size-scale vector s, all of one dimension d.
template <typename Scalar>
struct OrdinalTables {
  std::map<FragmentClass, Vector<Scalar>> e;
  std::map<FragmentClass, Vector<Scalar>> s;
};

template <typename Scalar>
struct OrdinalEncoding {
  Vector<Scalar> class_vec;
  Vector<Scalar> scaled_vec;

  /// (class_vec, scaled_vec), dimension 2d.
  Vector<Scalar> feature() const {
    Vector<Scalar> out(class_vec.size() + scaled_vec.size());
    out << class_vec, scaled_vec;
    return out;
  }
};

template <typename Scalar>
OrdinalEncoding<Scalar> ordinal_encode(const Fragment& f, const OrdinalTables<Scalar>& tables) {
  const auto e = tables.e.find(f.frag_class);
  const auto s = tables.s.find(f.frag_class);
  if (e == tables.e.end() || s == tables.s.end()) {
    throw std::invalid_argument("ordinal tables lack class " + to_string(f.frag_class));
  }
  if (e->second.size() != s->second.size()) {
    throw std::invalid_argument("ordinal tables: e and s dimensions differ for class " +
                                to_string(f.frag_class));
  }
  for (const auto& [cls, vec] : tables.e) {
    if (vec.size() != e->second.size()) throw std::invalid_argument("ordinal tables: inconsistent dimension");
  }
  for (const auto& [cls, vec] : tables.s) {
    if (vec.size() != e->second.size()) throw std::invalid_argument("ordinal tables: inconsistent dimension");
  }
  return {e->second, static_cast<Scalar>(f.size()) * s->second};
}

}  // namespace fragwl

#endif  // FRAGWL_ORDINAL_HPP
