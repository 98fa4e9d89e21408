// Writes the edge certificate table for degrees 2..N to stdout.
#include <cstdlib>
#include <iostream>

#include "partmon/insn.hpp"

using namespace partmon;

namespace {
  void each_pp(degree_type n, std::vector<degree_type>& img, degree_type x,
               std::vector<bool>& used, std::vector<PartialPerm>& out) {
    if (x > n) {
      out.emplace_back(img);
      return;
    }
    img[x - 1] = 0;
    each_pp(n, img, x + 1, used, out);
    for (degree_type y = 1; y <= n; ++y) {
      if (!used[y]) {
        used[y]  = true;
        img[x - 1] = y;
        each_pp(n, img, x + 1, used, out);
        used[y] = false;
      }
    }
  }
}  // namespace

int main(int argc, char** argv) {
  degree_type const top = argc > 1 ? std::atoi(argv[1]) : 4;
  std::size_t       failed = 0;
  std::cout << "// Generated by tools/gen_insn_table. Do not edit.\n"
               "#include <cstddef>\n\nnamespace partmon::detail {\n"
               "  extern char const* const insn_table[];\n"
               "  extern std::size_t const insn_table_size;\n"
               "  char const* const insn_table[] = {\n";
  std::size_t count = 0;
  for (degree_type n = 2; n <= top; ++n) {
    std::vector<degree_type> img(n);
    std::vector<bool>        used(n + 1, false);
    std::vector<PartialPerm> all;
    each_pp(n, img, 1, used, all);
    for (auto const& beta : all) {
      if (beta.rank() == n) {
        continue;
      }
      std::vector<bool> hole(n + 1, true);
      for (auto y : beta.images()) {
        if (y != 0) {
          hole[y] = false;
        }
      }
      auto emit = [&](EdgeKind kind, degree_type k, degree_type l) {
        SearchLimits lim;
        lim.slack = 2;
        auto c    = search_edge(beta, kind, k, l, lim);
        if (!c) {
          lim.slack = 4;
          lim.max_states = 20'000'000;
          c = search_edge(beta, kind, k, l, lim);
        }
        if (!c) {
          ++failed;
          std::cerr << "FAIL n=" << n << ' ' << to_string(beta) << ' '
                    << (kind == EdgeKind::Move ? 'M' : 'K') << ' ' << k << ' ' << l << '\n';
          return;
        }
        std::cout << "      \"" << edge_table_line(beta, kind, k, l, *c) << "\",\n";
        ++count;
      };
      for (degree_type k = 1; k <= n; ++k) {
        if (!hole[k]) {
          emit(EdgeKind::Kill, k, 0);
          continue;
        }
        for (degree_type l = 1; l <= n; ++l) {
          if (l != k && !hole[l]) {
            emit(EdgeKind::Move, k, l);
          }
        }
      }
    }
    std::cerr << "n=" << n << " done, " << count << " lines, " << failed << " failed\n";
  }
  std::cout << "      nullptr};\n  std::size_t const insn_table_size = " << count
            << ";\n}  // namespace partmon::detail\n";
  return failed == 0 ? 0 : 1;
}
