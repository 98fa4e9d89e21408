// Acceptance suite: one PASS/FAIL line per criterion on stdout, failure
// details on stderr, exit status 1 if any criterion fails.

#include <chrono>         // for steady_clock
#include <cstdio>         // for printf
#include <functional>     // for function
#include <iostream>       // for cerr
#include <string>         // for string
#include <unordered_set>  // for unordered_set

#include "partmon/diagram.hpp"
#include "partmon/verify.hpp"

using namespace partmon;

namespace {

  struct Outcome {
    bool        ok = true;
    std::string summary;
  };

  // Folds reports into an outcome; failure messages go to stderr.
  struct Collect {
    Outcome out;

    void add(Report const& r) {
      if (!r.ok()) {
        out.ok = false;
        std::cerr << "  " << r.check << " n=" << int(r.n) << ": " << r.failures
                  << " failures\n";
        for (auto const& m : r.messages) {
          std::cerr << "    " << m << '\n';
        }
      }
    }

    void require(bool cond, std::string const& what) {
      if (!cond) {
        out.ok = false;
        std::cerr << "  " << what << '\n';
      }
    }
  };

  double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }

  Outcome enumeration() {
    Collect     c;
    auto const  t0 = std::chrono::steady_clock::now();
    std::string sizes;
    for (degree_type n = 2; n <= 5; ++n) {
      std::unordered_set<Diagram> seen;
      std::size_t                 count = 0;
      for_each_diagram(n, [&](Diagram const& d) {
        ++count;
        seen.insert(d);
      });
      c.require(count == bell(2 * n) && seen.size() == count,
                "n=" + std::to_string(n) + ": " + std::to_string(count) + " diagrams, "
                    + std::to_string(seen.size()) + " distinct, Bell(2n)="
                    + std::to_string(bell(2 * n)));
      sizes += (n > 2 ? "," : "") + std::to_string(count);
    }
    double const t = seconds_since(t0);
    c.require(t < 30, "took " + std::to_string(t) + "s");
    c.out.summary = "|P_n| for n=2..5: " + sizes + " (" + std::to_string(t) + "s)";
    return c.out;
  }

  Outcome worked_example() {
    Collect       c;
    Diagram const alpha = parse_diagram("{1,4 | 2,3,4',5' | 5,6 | 1',3',6' | 2'}");
    Diagram const beta  = parse_diagram("{1,3 | 2,4,1' | 5,4',5',6' | 6 | 2' | 3'}");
    std::string const product = to_string(alpha * beta);
    c.require(product == "{1,4 | 2,3,1',4',5',6' | 5,6 | 2' | 3'}", "product " + product);
    c.require(alpha.dom() == std::vector<degree_type>{2, 3}, "dom");
    c.require(alpha.codom() == std::vector<degree_type>{4, 5}, "codom");
    c.require(to_string(alpha.ker()) == "(1,4|2,3|5,6)", "ker " + to_string(alpha.ker()));
    c.require(to_string(alpha.coker()) == "(1,3,6|2|4,5)", "coker " + to_string(alpha.coker()));
    c.require(alpha.rank() == 1, "rank");
    c.out.summary = "alpha*beta = " + product;
    return c.out;
  }

  Outcome relation_soundness() {
    Collect     c;
    auto const  t0        = std::chrono::steady_clock::now();
    std::size_t instances = 0;
    for (degree_type n = 2; n <= 5; ++n) {
      for (auto const* family : {"R1-R10", "R11-R21", "F", "Z"}) {
        Report const r = verify_relations(family, n);
        instances += r.instances;
        c.add(r);
      }
    }
    double const t = seconds_since(t0);
    c.require(t < 60, "took " + std::to_string(t) + "s");
    c.out.summary = std::to_string(instances) + " instances of R1-R21, F, Z at n=2..5";
    return c.out;
  }

  Outcome generation() {
    Collect     c;
    std::string sizes;
    std::size_t const expected[] = {13, 197, 4116};
    for (degree_type n = 2; n <= 4; ++n) {
      Report const r = verify_generation(n);
      c.add(r);
      c.require(r.instances == expected[n - 2], "closure size " + std::to_string(r.instances));
      sizes += (n > 2 ? "," : "") + std::to_string(r.instances);
    }
    c.out.summary = "closure sizes for n=2..4: " + sizes;
    return c.out;
  }

  Outcome normal_form_soundness() {
    Collect     c;
    std::size_t pairs = 0;
    for (degree_type n = 2; n <= 3; ++n) {
      c.add(verify_normal_forms(n));
      Report const r = verify_decide_sim(n);
      pairs += r.instances;
      c.add(r);
    }
    VerifyOptions opt;
    opt.samples    = 10'000;
    Report const r = verify_normal_forms(4, opt);
    c.add(r);
    c.out.summary = std::to_string(pairs) + " exhaustive pairs (n=2 len<=4, n=3 len<=3), "
                    + std::to_string(r.instances) + " random words at n=4";
    return c.out;
  }

  Outcome completeness() {
    Collect     c;
    std::string sizes;
    for (degree_type n = 2; n <= 3; ++n) {
      Report const r = verify_completeness(n);
      c.add(r);
      sizes += (n > 2 ? "," : "") + std::to_string(r.instances);
    }
    c.out.summary = "distinct triples for " + sizes + " singular diagrams";
    return c.out;
  }

  Outcome full_presentation() {
    Collect      c;
    Report const d = verify_decide_approx(3);
    c.add(d);
    c.add(verify_psi_transport(3));
    c.add(verify_psi_transport(4));
    for (degree_type n = 1; n <= 5; ++n) {
      c.add(verify_eps_tau(n));
    }
    c.out.summary = std::to_string(d.instances)
                    + " pairs at n=3; psi transport at n=3,4; eps/tau images n<=5";
    return c.out;
  }

  Outcome factorization() {
    Collect     c;
    std::string detail;
    std::size_t cases = 0;
    for (degree_type n = 2; n <= 3; ++n) {
      Report const r = verify_factorization(n);
      c.add(r);
      cases += r.instances;
      detail += " n=" + std::to_string(n) + " " + r.detail;
    }
    c.out.summary = std::to_string(cases) + " diagrams;" + detail;
    return c.out;
  }

  Outcome monotonicity() {
    Collect       c;
    VerifyOptions opt;
    opt.samples    = 1000;
    Report const r = verify_monotonicity(4, opt);
    c.add(r);
    c.out.summary = std::to_string(r.instances) + " rounds checked over 1000 words at n=4";
    return c.out;
  }

}  // namespace

int main() {
  struct Criterion {
    char const*              name;
    std::function<Outcome()> run;
  };
  Criterion const criteria[] = {
      {"enumeration", enumeration},
      {"worked example", worked_example},
      {"relation soundness", relation_soundness},
      {"generation", generation},
      {"normal-form soundness and canonicity", normal_form_soundness},
      {"normal-form completeness", completeness},
      {"full presentation", full_presentation},
      {"factorization", factorization},
      {"monotonicity", monotonicity},
  };
  int failed = 0;
  int index  = 0;
  for (auto const& cr : criteria) {
    ++index;
    auto const t0 = std::chrono::steady_clock::now();
    Outcome    o;
    try {
      o = cr.run();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.ok ? 0 : 1;
    std::printf("%s %d %s: %s [%.1fs]\n", o.ok ? "PASS" : "FAIL", index, cr.name,
                o.summary.c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
