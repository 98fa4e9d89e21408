#include "partmon/diagram.hpp"

#include <algorithm>  // for sort, max
#include <cctype>     // for isdigit, isspace
#include <numeric>    // for iota

#include "partmon/exception.hpp"

namespace partmon {

  DegreeMismatch::DegreeMismatch(std::size_t lhs, std::size_t rhs)
      : Exception("degree mismatch: " + std::to_string(lhs) + " vs "
                  + std::to_string(rhs)) {}

  ParseError::ParseError(std::string const& msg, std::size_t pos)
      : Exception("parse error at offset " + std::to_string(pos) + ": " + msg),
        _pos(pos) {}

  namespace {

    // Relabel so that labels appear in order of first occurrence.
    std::vector<std::uint32_t> rgs(std::vector<std::uint32_t> const& in,
                                   std::size_t& nr) {
      std::vector<std::uint32_t> map;
      std::vector<std::uint32_t> out(in.size());
      std::uint32_t const        none = static_cast<std::uint32_t>(-1);
      for (std::size_t i = 0; i < in.size(); ++i) {
        if (in[i] >= map.size()) {
          map.resize(in[i] + 1, none);
        }
        if (map[in[i]] == none) {
          map[in[i]] = static_cast<std::uint32_t>(nr++);
        }
        out[i] = map[in[i]];
      }
      return out;
    }

    struct UnionFind {
      std::vector<std::uint32_t> parent;

      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
      }

      std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }

      void unite(std::uint32_t x, std::uint32_t y) {
        x = find(x);
        y = find(y);
        if (x < y) {
          parent[y] = x;
        } else if (y < x) {
          parent[x] = y;
        }
      }
    };

    void skip_space(std::string_view s, std::size_t& i) {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
        ++i;
      }
    }

    degree_type read_number(std::string_view s, std::size_t& i) {
      skip_space(s, i);
      if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) {
        throw ParseError("expected a positive integer", i);
      }
      std::size_t const start = i;
      std::uint64_t     v     = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
        if (v > 1'000'000) {
          throw ParseError("integer too large", start);
        }
        ++i;
      }
      if (v == 0) {
        throw ParseError("points are numbered from 1", start);
      }
      return static_cast<degree_type>(v);
    }

    void expect(std::string_view s, std::size_t& i, char c) {
      skip_space(s, i);
      if (i >= s.size() || s[i] != c) {
        throw ParseError(std::string("expected '") + c + "'", i);
      }
      ++i;
    }

  }  // namespace

  std::string to_string(Point const& p) {
    return std::to_string(p.index) + (p.primed ? "'" : "");
  }

  ////////////////////////////////////////////////////////////////////////
  // Equivalence
  ////////////////////////////////////////////////////////////////////////

  Equivalence::Equivalence(degree_type n) : _class(n) {
    std::iota(_class.begin(), _class.end(), 0);
  }

  Equivalence Equivalence::from_labels(std::vector<std::uint32_t> const& labels) {
    Equivalence result;
    std::size_t nr = 0;
    result._class  = rgs(labels, nr);
    return result;
  }

  Equivalence
  Equivalence::from_classes(degree_type                                  n,
                            std::vector<std::vector<degree_type>> const& classes) {
    UnionFind uf(n);
    for (auto const& c : classes) {
      for (auto x : c) {
        if (x < 1 || x > n) {
          throw InvalidArgument("element " + std::to_string(x)
                                + " out of range for degree "
                                + std::to_string(n));
        }
        uf.unite(c.front() - 1, x - 1);
      }
    }
    std::vector<std::uint32_t> labels(n);
    for (degree_type x = 0; x < n; ++x) {
      labels[x] = uf.find(x);
    }
    return from_labels(labels);
  }

  Equivalence Equivalence::pair(degree_type n, degree_type a, degree_type b) {
    return from_classes(n, {{a, b}});
  }

  std::size_t Equivalence::number_of_classes() const noexcept {
    return _class.empty()
               ? 0
               : *std::max_element(_class.begin(), _class.end()) + 1;
  }

  std::vector<std::vector<degree_type>> Equivalence::classes() const {
    std::vector<std::vector<degree_type>> result(number_of_classes());
    for (degree_type x = 1; x <= degree(); ++x) {
      result[class_of(x)].push_back(x);
    }
    return result;
  }

  bool Equivalence::is_finer_than(Equivalence const& that) const {
    if (degree() != that.degree()) {
      throw DegreeMismatch(degree(), that.degree());
    }
    std::vector<std::int64_t>        image(number_of_classes(), -1);
    for (degree_type x = 1; x <= degree(); ++x) {
      auto& slot = image[class_of(x)];
      if (slot == -1) {
        slot = that.class_of(x);
      } else if (slot != that.class_of(x)) {
        return false;
      }
    }
    return true;
  }

  Equivalence join(Equivalence const& x, Equivalence const& y) {
    if (x.degree() != y.degree()) {
      throw DegreeMismatch(x.degree(), y.degree());
    }
    degree_type const n = x.degree();
    UnionFind         uf(n);
    std::vector<std::int64_t> first_x(n, -1), first_y(n, -1);
    for (degree_type i = 0; i < n; ++i) {
      auto cx = x.labels()[i];
      auto cy = y.labels()[i];
      if (first_x[cx] == -1) {
        first_x[cx] = i;
      } else {
        uf.unite(static_cast<std::uint32_t>(first_x[cx]), i);
      }
      if (first_y[cy] == -1) {
        first_y[cy] = i;
      } else {
        uf.unite(static_cast<std::uint32_t>(first_y[cy]), i);
      }
    }
    std::vector<std::uint32_t> labels(n);
    for (degree_type i = 0; i < n; ++i) {
      labels[i] = uf.find(i);
    }
    return Equivalence::from_labels(labels);
  }

  std::string to_string(Equivalence const& e) {
    std::string out = "(";
    bool        first_class = true;
    for (auto const& c : e.classes()) {
      if (!first_class) {
        out += '|';
      }
      first_class = false;
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (k > 0) {
          out += ',';
        }
        out += std::to_string(c[k]);
      }
    }
    return out + ")";
  }

  Equivalence parse_equivalence(std::string_view s, degree_type n) {
    std::size_t                           i = 0;
    std::vector<std::vector<degree_type>> classes(1);
    degree_type                           max = 0;
    expect(s, i, '(');
    skip_space(s, i);
    if (i < s.size() && s[i] == ')') {
      ++i;
      classes.clear();
    } else {
      while (true) {
        degree_type x = read_number(s, i);
        max           = std::max(max, x);
        classes.back().push_back(x);
        skip_space(s, i);
        if (i >= s.size()) {
          throw ParseError("unterminated equivalence", i);
        }
        if (s[i] == ',') {
          ++i;
        } else if (s[i] == '|') {
          ++i;
          classes.emplace_back();
        } else if (s[i] == ')') {
          ++i;
          break;
        } else {
          throw ParseError("unexpected character", i);
        }
      }
    }
    skip_space(s, i);
    if (i != s.size()) {
      throw ParseError("trailing characters", i);
    }
    if (n == 0) {
      n = max;
    } else if (max > n) {
      throw ParseError("element exceeds degree", 0);
    }
    std::vector<bool> seen(n + 1, false);
    for (auto const& c : classes) {
      for (auto x : c) {
        if (seen[x]) {
          throw ParseError("element " + std::to_string(x) + " repeated", 0);
        }
        seen[x] = true;
      }
    }
    return Equivalence::from_classes(n, classes);
  }

  ////////////////////////////////////////////////////////////////////////
  // PartialPerm
  ////////////////////////////////////////////////////////////////////////

  PartialPerm::PartialPerm(std::vector<degree_type> img) : _img(std::move(img)) {
    std::vector<bool> seen(_img.size() + 1, false);
    for (auto y : _img) {
      if (y > _img.size()) {
        throw InvalidArgument("image " + std::to_string(y) + " out of range");
      }
      if (y != 0) {
        if (seen[y]) {
          throw InvalidArgument("not injective: " + std::to_string(y)
                                + " is hit twice");
        }
        seen[y] = true;
      }
    }
  }

  PartialPerm PartialPerm::identity(degree_type n) {
    std::vector<degree_type> img(n);
    std::iota(img.begin(), img.end(), 1);
    return PartialPerm(std::move(img));
  }

  std::size_t PartialPerm::rank() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(_img.begin(), _img.end(), [](auto y) { return y != 0; }));
  }

  std::vector<degree_type> PartialPerm::domain() const {
    std::vector<degree_type> out;
    for (degree_type x = 1; x <= degree(); ++x) {
      if (defined(x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::vector<degree_type> PartialPerm::codomain() const {
    std::vector<degree_type> out;
    for (auto y : _img) {
      if (y != 0) {
        out.push_back(y);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  PartialPerm PartialPerm::inverse() const {
    std::vector<degree_type> img(degree(), 0);
    for (degree_type x = 1; x <= degree(); ++x) {
      if (defined(x)) {
        img[(*this)(x) - 1] = x;
      }
    }
    return PartialPerm(std::move(img));
  }

  PartialPerm operator*(PartialPerm const& a, PartialPerm const& b) {
    if (a.degree() != b.degree()) {
      throw DegreeMismatch(a.degree(), b.degree());
    }
    std::vector<degree_type> img(a.degree(), 0);
    for (degree_type x = 1; x <= a.degree(); ++x) {
      if (a.defined(x)) {
        img[x - 1] = b(a(x));
      }
    }
    return PartialPerm(std::move(img));
  }

  std::string to_string(PartialPerm const& p) {
    std::string out   = "[";
    bool        first = true;
    for (degree_type x = 1; x <= p.degree(); ++x) {
      if (p.defined(x)) {
        if (!first) {
          out += ", ";
        }
        first = false;
        out += std::to_string(x) + "->" + std::to_string(p(x));
      }
    }
    return out + "]";
  }

  ////////////////////////////////////////////////////////////////////////
  // Diagram
  ////////////////////////////////////////////////////////////////////////

  Diagram::Diagram(std::vector<std::uint32_t> canonical_labels)
      : _label(std::move(canonical_labels)) {
    _nr_blocks = _label.empty()
                     ? 0
                     : *std::max_element(_label.begin(), _label.end()) + 1;
  }

  Diagram Diagram::from_labels(std::vector<std::uint32_t> const& labels) {
    if (labels.empty() || labels.size() % 2 != 0) {
      throw InvalidArgument("a diagram needs 2n labels with n >= 1");
    }
    std::size_t nr = 0;
    return Diagram(rgs(labels, nr));
  }

  Diagram Diagram::from_blocks(degree_type                            n,
                               std::vector<std::vector<Point>> const& blocks) {
    if (n == 0) {
      throw InvalidArgument("degree must be at least 1");
    }
    std::uint32_t const        none = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> labels(2 * n, none);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) {
        throw InvalidArgument("empty block");
      }
      for (auto const& p : blocks[b]) {
        if (p.index < 1 || p.index > n) {
          throw InvalidArgument("point " + to_string(p)
                                + " out of range for degree "
                                + std::to_string(n));
        }
        if (labels[p.slot()] != none) {
          throw InvalidArgument("point " + to_string(p) + " repeated");
        }
        labels[p.slot()] = static_cast<std::uint32_t>(b);
      }
    }
    for (std::size_t s = 0; s < labels.size(); ++s) {
      if (labels[s] == none) {
        throw InvalidArgument("point " + to_string(Point::from_slot(s))
                              + " missing");
      }
    }
    return from_labels(labels);
  }

  Diagram Diagram::identity(degree_type n) {
    if (n == 0) {
      throw InvalidArgument("degree must be at least 1");
    }
    std::vector<std::uint32_t> labels(2 * n);
    for (std::size_t s = 0; s < labels.size(); ++s) {
      labels[s] = static_cast<std::uint32_t>(s / 2);
    }
    return Diagram(std::move(labels));
  }

  std::vector<std::vector<Point>> Diagram::blocks() const {
    std::vector<std::vector<Point>> result(_nr_blocks);
    degree_type const               n = degree();
    // Upper row first, then lower row, so each block comes out sorted.
    for (degree_type x = 1; x <= n; ++x) {
      result[block_of({x, false})].push_back({x, false});
    }
    for (degree_type x = 1; x <= n; ++x) {
      result[block_of({x, true})].push_back({x, true});
    }
    std::sort(result.begin(), result.end(),
              [](auto const& a, auto const& b) { return a.front() < b.front(); });
    return result;
  }

  namespace {
    // For each block: does it meet the upper / lower row.
    void row_flags(Diagram const&     d,
                   std::vector<bool>& upper,
                   std::vector<bool>& lower) {
      upper.assign(d.number_of_blocks(), false);
      lower.assign(d.number_of_blocks(), false);
      for (degree_type x = 1; x <= d.degree(); ++x) {
        upper[d.block_of({x, false})] = true;
        lower[d.block_of({x, true})]  = true;
      }
    }
  }  // namespace

  std::size_t Diagram::rank() const {
    std::vector<bool> upper, lower;
    row_flags(*this, upper, lower);
    std::size_t r = 0;
    for (std::size_t b = 0; b < _nr_blocks; ++b) {
      r += (upper[b] && lower[b]) ? 1 : 0;
    }
    return r;
  }

  std::vector<degree_type> Diagram::dom() const {
    std::vector<bool> upper, lower;
    row_flags(*this, upper, lower);
    std::vector<degree_type> out;
    for (degree_type x = 1; x <= degree(); ++x) {
      if (lower[block_of({x, false})]) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::vector<degree_type> Diagram::codom() const {
    std::vector<bool> upper, lower;
    row_flags(*this, upper, lower);
    std::vector<degree_type> out;
    for (degree_type x = 1; x <= degree(); ++x) {
      if (upper[block_of({x, true})]) {
        out.push_back(x);
      }
    }
    return out;
  }

  Equivalence Diagram::ker() const {
    std::vector<std::uint32_t> labels(degree());
    for (degree_type x = 1; x <= degree(); ++x) {
      labels[x - 1] = block_of({x, false});
    }
    return Equivalence::from_labels(labels);
  }

  Equivalence Diagram::coker() const {
    std::vector<std::uint32_t> labels(degree());
    for (degree_type x = 1; x <= degree(); ++x) {
      labels[x - 1] = block_of({x, true});
    }
    return Equivalence::from_labels(labels);
  }

  bool Diagram::is_unit() const {
    return rank() == degree();
  }

  std::optional<PartialPerm> Diagram::as_partial_perm() const {
    degree_type const        n = degree();
    std::vector<degree_type> up(_nr_blocks, 0), down(_nr_blocks, 0);
    for (degree_type x = 1; x <= n; ++x) {
      auto& u = up[block_of({x, false})];
      if (u != 0) {
        return std::nullopt;
      }
      u      = x;
      auto& d = down[block_of({x, true})];
      if (d != 0) {
        return std::nullopt;
      }
      d = x;
    }
    std::vector<degree_type> img(n, 0);
    for (std::size_t b = 0; b < _nr_blocks; ++b) {
      if (up[b] != 0 && down[b] != 0) {
        img[up[b] - 1] = down[b];
      }
    }
    return PartialPerm(std::move(img));
  }

  bool Diagram::is_block_bijection() const {
    std::vector<bool> upper, lower;
    row_flags(*this, upper, lower);
    for (std::size_t b = 0; b < _nr_blocks; ++b) {
      if (!(upper[b] && lower[b])) {
        return false;
      }
    }
    return true;
  }

  bool Diagram::is_idempotent() const {
    return *this * *this == *this;
  }

  Diagram operator*(Diagram const& a, Diagram const& b) {
    if (a.degree() != b.degree()) {
      throw DegreeMismatch(a.degree(), b.degree());
    }
    degree_type const n = a.degree();
    // Nodes: top row 0..n-1, middle row n..2n-1, bottom row 2n..3n-1.
    UnionFind uf(3 * n);
    std::vector<std::int64_t> first(a.number_of_blocks(), -1);
    auto link = [&](std::vector<std::int64_t>& f, std::uint32_t block,
                    std::uint32_t node) {
      if (f[block] == -1) {
        f[block] = node;
      } else {
        uf.unite(static_cast<std::uint32_t>(f[block]), node);
      }
    };
    for (degree_type x = 0; x < n; ++x) {
      link(first, a.block_of({x + 1, false}), x);
      link(first, a.block_of({x + 1, true}), n + x);
    }
    first.assign(b.number_of_blocks(), -1);
    for (degree_type x = 0; x < n; ++x) {
      link(first, b.block_of({x + 1, false}), n + x);
      link(first, b.block_of({x + 1, true}), 2 * n + x);
    }
    std::vector<std::uint32_t> labels(2 * n);
    for (degree_type x = 0; x < n; ++x) {
      labels[2 * x]     = uf.find(x);
      labels[2 * x + 1] = uf.find(2 * n + x);
    }
    return Diagram::from_labels(labels);
  }

  Diagram to_diagram(PartialPerm const& p) {
    degree_type const          n = p.degree();
    std::vector<std::uint32_t> labels(2 * n);
    // Upper point x gets label x - 1; an unmatched lower point y gets n + y.
    for (degree_type y = 1; y <= n; ++y) {
      labels[2 * (y - 1) + 1] = n + y;
    }
    for (degree_type x = 1; x <= n; ++x) {
      labels[2 * (x - 1)] = x - 1;
      if (p.defined(x)) {
        labels[2 * (p(x) - 1) + 1] = x - 1;
      }
    }
    return Diagram::from_labels(labels);
  }

  std::string to_string(Diagram const& d) {
    std::string out   = "{";
    bool        first = true;
    for (auto const& block : d.blocks()) {
      if (!first) {
        out += " | ";
      }
      first = false;
      for (std::size_t k = 0; k < block.size(); ++k) {
        if (k > 0) {
          out += ',';
        }
        out += to_string(block[k]);
      }
    }
    return out + "}";
  }

  Diagram parse_diagram(std::string_view s) {
    std::size_t                     i = 0;
    std::vector<std::vector<Point>> blocks(1);
    std::vector<std::size_t>        offsets;
    degree_type                     n = 0;
    expect(s, i, '{');
    while (true) {
      offsets.push_back(i);
      degree_type x = read_number(s, i);
      bool        primed = false;
      if (i < s.size() && s[i] == '\'') {
        primed = true;
        ++i;
      }
      n = std::max(n, x);
      blocks.back().push_back({x, primed});
      skip_space(s, i);
      if (i >= s.size()) {
        throw ParseError("unterminated diagram", i);
      }
      if (s[i] == ',') {
        ++i;
      } else if (s[i] == '|') {
        ++i;
        blocks.emplace_back();
      } else if (s[i] == '}') {
        ++i;
        break;
      } else {
        throw ParseError("unexpected character", i);
      }
    }
    skip_space(s, i);
    if (i != s.size()) {
      throw ParseError("trailing characters", i);
    }
    std::vector<bool> seen(2 * n, false);
    std::size_t       k = 0;
    for (auto const& block : blocks) {
      for (auto const& p : block) {
        if (seen[p.slot()]) {
          throw ParseError("point " + to_string(p) + " repeated", offsets[k]);
        }
        seen[p.slot()] = true;
        ++k;
      }
    }
    for (std::size_t slot = 0; slot < seen.size(); ++slot) {
      if (!seen[slot]) {
        throw ParseError("point " + to_string(Point::from_slot(slot))
                             + " missing",
                         s.size());
      }
    }
    return Diagram::from_blocks(n, blocks);
  }

  std::string render(Diagram const& d) {
    // Each point gets a column; the mark is the letter of its block.
    degree_type const n     = d.degree();
    auto              blk   = d.blocks();
    std::vector<char> name(d.number_of_blocks());
    for (std::size_t b = 0; b < blk.size(); ++b) {
      char c = b < 26 ? static_cast<char>('a' + b)
                      : (b < 52 ? static_cast<char>('A' + b - 26) : '#');
      name[d.block_of(blk[b].front())] = c;
    }
    std::string top, mid, bot;
    for (degree_type x = 1; x <= n; ++x) {
      char u = name[d.block_of({x, false})];
      char l = name[d.block_of({x, true})];
      top += ' ';
      top += u;
      mid += ' ';
      mid += (u == l) ? '|' : ' ';
      bot += ' ';
      bot += l;
    }
    std::string legend;
    for (std::size_t b = 0; b < blk.size(); ++b) {
      legend += "\n  ";
      legend += name[d.block_of(blk[b].front())];
      legend += ": ";
      for (std::size_t k = 0; k < blk[b].size(); ++k) {
        if (k > 0) {
          legend += ',';
        }
        legend += to_string(blk[b][k]);
      }
    }
    return top + "\n" + mid + "\n" + bot + legend + "\n";
  }

}  // namespace partmon

namespace {
  std::size_t hash_vec(std::vector<std::uint32_t> const& v) noexcept {
    std::size_t h = v.size();
    for (auto x : v) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
}  // namespace

std::size_t
std::hash<partmon::Diagram>::operator()(partmon::Diagram const& d) const noexcept {
  return hash_vec(d.labels());
}

std::size_t std::hash<partmon::Equivalence>::operator()(
    partmon::Equivalence const& e) const noexcept {
  return hash_vec(e.labels());
}

std::size_t std::hash<partmon::PartialPerm>::operator()(
    partmon::PartialPerm const& p) const noexcept {
  return hash_vec(p.images());
}
