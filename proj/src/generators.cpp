#include "partmon/generators.hpp"

#include <string>  // for to_string

#include "partmon/exception.hpp"

namespace partmon {

  namespace {
    void check_index(degree_type n, degree_type x, char const* what) {
      if (n == 0 || x < 1 || x > n) {
        throw InvalidArgument(std::string(what) + " = " + std::to_string(x)
                              + " out of range for degree "
                              + std::to_string(n));
      }
    }

    std::vector<std::uint32_t> identity_labels(degree_type n) {
      std::vector<std::uint32_t> labels(2 * n);
      for (std::size_t s = 0; s < labels.size(); ++s) {
        labels[s] = static_cast<std::uint32_t>(s / 2);
      }
      return labels;
    }
  }  // namespace

  Diagram gen_e(degree_type n, degree_type r) {
    check_index(n, r, "r");
    auto labels                 = identity_labels(n);
    labels[Point{r, true}.slot()] = n;
    return Diagram::from_labels(labels);
  }

  Diagram gen_t(degree_type n, degree_type i, degree_type j) {
    check_index(n, i, "i");
    check_index(n, j, "j");
    if (i == j) {
      throw InvalidArgument("t_ij needs i != j");
    }
    return t_of_set(n, {i, j});
  }

  Diagram gen_f(degree_type n, degree_type i, degree_type j) {
    check_index(n, i, "i");
    check_index(n, j, "j");
    if (i == j) {
      throw InvalidArgument("f_ij needs i != j");
    }
    std::vector<degree_type> img(n);
    for (degree_type x = 1; x <= n; ++x) {
      img[x - 1] = x;
    }
    img[i - 1] = 0;
    img[j - 1] = i;
    return to_diagram(PartialPerm(img));
  }

  Diagram gen_s(degree_type n, degree_type i) {
    if (i < 1 || i >= n) {
      throw InvalidArgument("s_" + std::to_string(i)
                            + " out of range for degree " + std::to_string(n));
    }
    std::vector<degree_type> perm(n);
    for (degree_type x = 1; x <= n; ++x) {
      perm[x - 1] = x;
    }
    std::swap(perm[i - 1], perm[i]);
    return perm_diagram(perm);
  }

  Diagram t_of_set(degree_type n, std::vector<degree_type> const& A) {
    auto labels = identity_labels(n);
    for (auto a : A) {
      check_index(n, a, "element");
      labels[Point{a, false}.slot()] = A.front() - 1;
      labels[Point{a, true}.slot()]  = A.front() - 1;
    }
    return Diagram::from_labels(labels);
  }

  Diagram t_of_equivalence(Equivalence const& eq) {
    degree_type const          n = eq.degree();
    std::vector<std::uint32_t> labels(2 * n);
    for (degree_type x = 1; x <= n; ++x) {
      labels[Point{x, false}.slot()] = eq.class_of(x);
      labels[Point{x, true}.slot()]  = eq.class_of(x);
    }
    return Diagram::from_labels(labels);
  }

  Diagram perm_diagram(std::vector<degree_type> const& perm) {
    PartialPerm p(perm);
    if (p.rank() != perm.size()) {
      throw InvalidArgument("not a permutation");
    }
    return to_diagram(p);
  }

}  // namespace partmon
