//
// Partition diagrams of degree n: set partitions of {1, ..., n, 1', ..., n'}
// under stack-and-contract composition, together with the equivalences and
// partial permutations read off them.
//

#ifndef PARTMON_DIAGRAM_HPP_
#define PARTMON_DIAGRAM_HPP_

#include <compare>     // for strong_ordering
#include <cstddef>     // for size_t
#include <cstdint>     // for uint32_t
#include <functional>  // for hash
#include <optional>    // for optional
#include <string>      // for string
#include <string_view>  // for string_view
#include <vector>      // for vector

namespace partmon {

  using degree_type = std::uint32_t;

  //! A point of the upper row (\c primed false) or lower row (\c primed true).
  //! Points are ordered 1 < 2 < ... < n < 1' < 2' < ... < n'; storage uses the
  //! interleaved slot numbering 1, 1', 2, 2', ...
  struct Point {
    degree_type index;
    bool        primed;

    //! Storage position: 1 -> 0, 1' -> 1, 2 -> 2, ...
    [[nodiscard]] constexpr std::size_t slot() const noexcept {
      return 2 * static_cast<std::size_t>(index - 1) + (primed ? 1 : 0);
    }

    [[nodiscard]] static constexpr Point from_slot(std::size_t s) noexcept {
      return Point{static_cast<degree_type>(s / 2 + 1), (s % 2) == 1};
    }

    friend constexpr auto operator<=>(Point const& x, Point const& y) noexcept {
      if (x.primed != y.primed) {
        return x.primed <=> y.primed;
      }
      return x.index <=> y.index;
    }
    friend constexpr bool operator==(Point const&, Point const&) = default;
  };

  [[nodiscard]] std::string to_string(Point const& p);

  ////////////////////////////////////////////////////////////////////////
  // Equivalence
  ////////////////////////////////////////////////////////////////////////

  //! An equivalence relation on {1, ..., n}.
  //!
  //! Classes are numbered densely from 0 in order of their least element, so
  //! two equivalences are equal iff their class vectors are equal.
  class Equivalence {
   public:
    Equivalence() = default;

    //! The trivial equivalence (all classes singletons).
    explicit Equivalence(degree_type n);

    //! From an arbitrary class labelling of 1..n (labels[x - 1] is the label
    //! of x); the labels are renumbered canonically.
    static Equivalence from_labels(std::vector<std::uint32_t> const& labels);

    //! From a list of classes; elements not mentioned become singletons.
    static Equivalence from_classes(degree_type                               n,
                                    std::vector<std::vector<degree_type>> const& classes);

    //! The equivalence whose only non-singleton class is {a, b}.
    static Equivalence pair(degree_type n, degree_type a, degree_type b);

    [[nodiscard]] degree_type degree() const noexcept {
      return static_cast<degree_type>(_class.size());
    }

    //! Canonical class index of x (1-based element, 0-based class).
    [[nodiscard]] std::uint32_t class_of(degree_type x) const {
      return _class.at(x - 1);
    }

    [[nodiscard]] bool related(degree_type x, degree_type y) const {
      return class_of(x) == class_of(y);
    }

    [[nodiscard]] std::size_t number_of_classes() const noexcept;

    //! Classes in canonical order, each sorted increasingly.
    [[nodiscard]] std::vector<std::vector<degree_type>> classes() const;

    [[nodiscard]] bool is_trivial() const noexcept {
      return number_of_classes() == _class.size();
    }

    //! \c true if every class of \c this lies inside a class of \p that.
    [[nodiscard]] bool is_finer_than(Equivalence const& that) const;

    [[nodiscard]] std::vector<std::uint32_t> const& labels() const noexcept {
      return _class;
    }

    friend bool operator==(Equivalence const&, Equivalence const&) = default;
    friend auto operator<=>(Equivalence const&, Equivalence const&) = default;

   private:
    std::vector<std::uint32_t> _class;
  };

  //! Least equivalence containing both arguments.
  [[nodiscard]] Equivalence join(Equivalence const& x, Equivalence const& y);

  //! Format as (1,4|2,3|5,6); singletons are listed too.
  [[nodiscard]] std::string to_string(Equivalence const& e);

  //! Inverse of to_string; the degree is the largest element mentioned
  //! unless \p n is given.
  [[nodiscard]] Equivalence parse_equivalence(std::string_view  s,
                                              degree_type n = 0);

  ////////////////////////////////////////////////////////////////////////
  // PartialPerm
  ////////////////////////////////////////////////////////////////////////

  //! A partial injection of {1, ..., n}; image(x) == 0 means x is not in the
  //! domain.
  class PartialPerm {
   public:
    PartialPerm() = default;

    //! The empty partial permutation of degree n.
    explicit PartialPerm(degree_type n) : _img(n, 0) {}

    //! Throws InvalidArgument if \p img is not injective on its domain or
    //! mentions points outside 1..n.
    explicit PartialPerm(std::vector<degree_type> img);

    static PartialPerm identity(degree_type n);

    [[nodiscard]] degree_type degree() const noexcept {
      return static_cast<degree_type>(_img.size());
    }

    //! 0 if undefined.
    [[nodiscard]] degree_type operator()(degree_type x) const {
      return _img.at(x - 1);
    }

    [[nodiscard]] bool defined(degree_type x) const {
      return (*this)(x) != 0;
    }

    [[nodiscard]] std::size_t rank() const noexcept;
    [[nodiscard]] std::vector<degree_type> domain() const;
    [[nodiscard]] std::vector<degree_type> codomain() const;

    //! The inverse partial permutation.
    [[nodiscard]] PartialPerm inverse() const;

    [[nodiscard]] std::vector<degree_type> const& images() const noexcept {
      return _img;
    }

    friend bool operator==(PartialPerm const&, PartialPerm const&) = default;
    friend auto operator<=>(PartialPerm const&, PartialPerm const&) = default;

   private:
    std::vector<degree_type> _img;
  };

  //! Composition, left to right: x(ab) = (xa)b.
  [[nodiscard]] PartialPerm operator*(PartialPerm const& a,
                                      PartialPerm const& b);

  //! Format as [2->1, 3->3].
  [[nodiscard]] std::string to_string(PartialPerm const& p);

  ////////////////////////////////////////////////////////////////////////
  // Diagram
  ////////////////////////////////////////////////////////////////////////

  //! An element of the partition monoid P_n.
  //!
  //! Stored as a block label for each of the 2n points in the order
  //! 1, 1', 2, 2', ...; labels are assigned in order of first occurrence, so
  //! the representation is canonical and operator== is monoid equality.
  class Diagram {
   public:
    Diagram() = default;

    //! From an arbitrary labelling of the 2n slots (see Point::slot).
    static Diagram from_labels(std::vector<std::uint32_t> const& labels);

    //! From blocks in any order. Throws InvalidArgument unless the blocks
    //! partition {1..n, 1'..n'}.
    static Diagram from_blocks(degree_type                          n,
                               std::vector<std::vector<Point>> const& blocks);

    static Diagram identity(degree_type n);

    [[nodiscard]] degree_type degree() const noexcept {
      return static_cast<degree_type>(_label.size() / 2);
    }

    //! Canonical block index of a point.
    [[nodiscard]] std::uint32_t block_of(Point p) const {
      return _label.at(p.slot());
    }

    [[nodiscard]] std::size_t number_of_blocks() const noexcept {
      return _nr_blocks;
    }

    //! Blocks sorted by least point, points within a block sorted.
    [[nodiscard]] std::vector<std::vector<Point>> blocks() const;

    [[nodiscard]] std::vector<std::uint32_t> const& labels() const noexcept {
      return _label;
    }

    //! Number of transversal blocks.
    [[nodiscard]] std::size_t rank() const;

    [[nodiscard]] std::vector<degree_type> dom() const;
    [[nodiscard]] std::vector<degree_type> codom() const;
    [[nodiscard]] Equivalence              ker() const;
    [[nodiscard]] Equivalence              coker() const;

    //! rank == n.
    [[nodiscard]] bool is_unit() const;

    //! rank < n.
    [[nodiscard]] bool is_singular() const {
      return !is_unit();
    }

    //! Every block meets each row in at most one point.
    [[nodiscard]] std::optional<PartialPerm> as_partial_perm() const;

    //! Every block is transversal.
    [[nodiscard]] bool is_block_bijection() const;

    [[nodiscard]] bool is_idempotent() const;

    friend bool operator==(Diagram const&, Diagram const&) = default;
    friend auto operator<=>(Diagram const&, Diagram const&) = default;

   private:
    explicit Diagram(std::vector<std::uint32_t> canonical_labels);

    std::vector<std::uint32_t> _label;
    std::size_t                _nr_blocks = 0;
  };

  //! Stack-and-contract product. Throws DegreeMismatch.
  [[nodiscard]] Diagram operator*(Diagram const& a, Diagram const& b);

  //! Embedding of I_n into P_n.
  [[nodiscard]] Diagram to_diagram(PartialPerm const& p);

  //! Bit-exact text form, e.g. {1,4 | 2,3,4',5' | 5,6 | 1',3',6' | 2'}.
  [[nodiscard]] std::string to_string(Diagram const& d);

  //! Accepts any block order, point order and whitespace; the degree is the
  //! largest index mentioned. Throws ParseError.
  [[nodiscard]] Diagram parse_diagram(std::string_view s);

  //! Two-row ASCII picture.
  [[nodiscard]] std::string render(Diagram const& d);

}  // namespace partmon

template <>
struct std::hash<partmon::Diagram> {
  std::size_t operator()(partmon::Diagram const& d) const noexcept;
};

template <>
struct std::hash<partmon::Equivalence> {
  std::size_t operator()(partmon::Equivalence const& e) const noexcept;
};

template <>
struct std::hash<partmon::PartialPerm> {
  std::size_t operator()(partmon::PartialPerm const& p) const noexcept;
};

#endif  // PARTMON_DIAGRAM_HPP_
