// partmon: command-line access to the library.
//
// Exit codes: 0 success, 1 a check or equality failed, 2 bad usage or input.

#include <fstream>   // for ifstream, ofstream
#include <iostream>  // for cout, cerr

#include <CLI11.hpp>
#include <json.hpp>

#include "partmon/exception.hpp"
#include "partmon/full.hpp"
#include "partmon/relations.hpp"
#include "partmon/verify.hpp"

using namespace partmon;
using nlohmann::ordered_json;

namespace {

  constexpr int exit_fail  = 1;
  constexpr int exit_usage = 2;

  std::string set_string(std::vector<degree_type> const& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      s += (i ? "," : "") + std::to_string(xs[i]);
    }
    return s + "}";
  }

  std::string step_string(Step const& s) {
    std::string out = s.is_macro ? to_string(s.macro) : s.rel;
    if (!s.is_macro && !s.subs.empty()) {
      out += " " + to_string(s.subs);
    }
    out += " at " + std::to_string(s.pos);
    if (s.is_macro) {
      out += ": " + to_string(s.from) + " -> " + to_string(s.to);
    } else {
      out += s.dir == Direction::forward ? " fwd" : " bwd";
    }
    return out;
  }

  void print_certificate(Certificate const& c) {
    std::cout << "certificate: " << c.size() << " step" << (c.size() == 1 ? "" : "s") << '\n';
    Word w = c.start();
    std::cout << "  " << to_string(w) << '\n';
    for (auto const& s : c.steps()) {
      w = apply_step(w, s);
      std::cout << "  " << step_string(s) << "\n    " << to_string(w) << '\n';
    }
  }

  void save_certificate(std::string const& path, Certificate const& c) {
    std::ofstream os(path);
    if (!os) {
      throw InvalidArgument("cannot write " + path);
    }
    write_jsonl(os, c);
  }

  ordered_json report_json(Report const& r) {
    ordered_json j;
    j["check"]     = r.check;
    j["n"]         = r.n;
    j["instances"] = r.instances;
    j["failures"]  = r.failures;
    j["elapsed"]   = r.elapsed;
    j["detail"]    = r.detail;
    j["messages"]  = r.messages;
    return j;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partition monoid diagrams, presentations and certified rewriting"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Structured output");

  int status = 0;

  std::string d1, d2;
  auto*       mul = app.add_subcommand("mul", "Product of two diagrams");
  mul->add_option("d1", d1)->required();
  mul->add_option("d2", d2)->required();
  mul->callback([&] {
    Diagram const p = parse_diagram(d1) * parse_diagram(d2);
    if (json) {
      std::cout << ordered_json{{"product", to_string(p)}}.dump() << '\n';
    } else {
      std::cout << to_string(p) << '\n';
    }
  });

  auto* info = app.add_subcommand("info", "Rank, domain, codomain, kernel, cokernel");
  info->add_option("d", d1)->required();
  info->callback([&] {
    Diagram const d = parse_diagram(d1);
    if (json) {
      ordered_json j;
      j["diagram"] = to_string(d);
      j["degree"]  = d.degree();
      j["rank"]    = d.rank();
      j["dom"]     = d.dom();
      j["codom"]   = d.codom();
      j["ker"]     = to_string(d.ker());
      j["coker"]   = to_string(d.coker());
      j["unit"]    = d.is_unit();
      std::cout << j.dump() << '\n';
    } else {
      std::cout << "diagram: " << to_string(d) << '\n'
                << "degree:  " << int(d.degree()) << '\n'
                << "rank:    " << d.rank() << '\n'
                << "dom:     " << set_string(d.dom()) << '\n'
                << "codom:   " << set_string(d.codom()) << '\n'
                << "ker:     " << to_string(d.ker()) << '\n'
                << "coker:   " << to_string(d.coker()) << '\n';
    }
  });

  std::string alphabet = "et";
  int         n        = 0;
  std::string w1, w2, cert_out;
  auto        add_word_opts = [&](CLI::App* c, std::vector<std::string> const& alphabets) {
    c->add_option("--alphabet", alphabet)
        ->check(CLI::IsMember(alphabets))
        ->capture_default_str();
    c->add_option("-n", n, "Degree")->required()->check(CLI::Range(1, 255));
  };

  auto* eval = app.add_subcommand("eval", "Diagram of a word");
  add_word_opts(eval, {"et", "set", "f"});
  eval->add_option("word", w1)->required();
  eval->callback([&] {
    Word const    w = parse_word(w1, n, parse_alphabet(alphabet));
    Diagram const d = evaluate(w);
    if (json) {
      std::cout << ordered_json{{"word", to_string(w)}, {"diagram", to_string(d)}}.dump()
                << '\n';
    } else {
      std::cout << to_string(d) << '\n';
    }
  });

  auto* nf = app.add_subcommand("nf", "Normal form of a word with singular image");
  add_word_opts(nf, {"et", "set"});
  nf->add_option("word", w1)->required();
  nf->add_option("--certificate", cert_out, "Write the certificate (JSONL)");
  nf->callback([&] {
    Word const w = parse_word(w1, n, parse_alphabet(alphabet));
    if (w.empty() || evaluate(w).is_unit()) {
      throw InvalidArgument("nf needs a word with singular image");
    }
    auto [form, c] = w.alphabet() == Alphabet::ET ? normal_form_ET(w) : normal_form_full(w);
    Word const target = c.end();
    if (!cert_out.empty()) {
      save_certificate(cert_out, c);
    }
    if (json) {
      ordered_json j;
      j["word"]   = to_string(w);
      j["normal_form"] = to_string(target);
      j["ker"]    = to_string(form.eps);
      j["alpha"]  = to_string(form.alpha);
      j["coker"]  = to_string(form.eta);
      j["steps"]  = c.size();
      std::cout << j.dump() << '\n';
    } else {
      std::cout << to_string(target) << '\n'
                << "ker " << to_string(form.eps) << "  alpha " << to_string(form.alpha)
                << "  coker " << to_string(form.eta) << '\n'
                << c.size() << " steps\n";
    }
  });

  auto* equal = app.add_subcommand("equal", "Decide equality of two words, with a certificate");
  add_word_opts(equal, {"et", "set"});
  equal->add_option("w1", w1)->required();
  equal->add_option("w2", w2)->required();
  equal->add_option("--certificate", cert_out, "Write the certificate (JSONL)");
  equal->callback([&] {
    Alphabet const a = parse_alphabet(alphabet);
    Word const     u = parse_word(w1, n, a);
    Word const     v = parse_word(w2, n, a);
    Decision const d = a == Alphabet::ET ? decide_sim(u, v) : decide_approx(u, v);
    if (d.equal && !cert_out.empty()) {
      save_certificate(cert_out, *d.certificate);
    }
    if (json) {
      ordered_json j;
      j["equal"] = d.equal;
      if (d.equal) {
        j["steps"] = d.certificate->size();
      }
      std::cout << j.dump() << '\n';
    } else if (d.equal) {
      std::cout << "equal\n";
      print_certificate(*d.certificate);
    } else {
      std::cout << "not equal\n";
    }
    status = d.equal ? 0 : exit_fail;
  });

  auto* factorize = app.add_subcommand("factorize", "A word over E u T for a singular diagram");
  factorize->add_option("d", d1)->required();
  factorize->callback([&] {
    Diagram const d = parse_diagram(d1);
    Word const    w = factorize_diagram(d);
    if (json) {
      std::cout << ordered_json{{"degree", d.degree()}, {"word", to_string(w)}}.dump()
                << '\n';
    } else {
      std::cout << to_string(w) << '\n';
    }
  });

  std::string file;
  auto*       rep = app.add_subcommand("replay", "Check a certificate file");
  rep->add_option("file", file)->required()->check(CLI::ExistingFile);
  rep->callback([&] {
    std::ifstream     is(file);
    Certificate const c   = read_jsonl(is);
    ReplayResult const r  = replay(c, ImageCheck::relations);
    if (json) {
      ordered_json j{{"ok", r.ok}, {"steps", c.size()}};
      if (!r.ok) {
        j["failed_step"] = r.failed_step;
        j["message"]     = r.message;
      }
      std::cout << j.dump() << '\n';
    } else if (r.ok) {
      std::cout << "ok: " << c.size() << " steps, " << to_string(c.start()) << " -> "
                << to_string(c.end()) << '\n';
    } else {
      std::cout << "failed at step " << r.failed_step << ": " << r.message << '\n';
    }
    status = r.ok ? 0 : exit_fail;
  });

  std::string   which;
  VerifyOptions vopt;
  auto*         ver = app.add_subcommand("verify", "Run verification checks");
  ver->add_option("check", which)
      ->required()
      ->check(CLI::IsMember({"singular", "full", "insn", "generation", "all"}));
  ver->add_option("-n", n, "Degree")->required()->check(CLI::Range(1, 6));
  ver->add_option("--seed", vopt.seed)->capture_default_str();
  ver->add_option("--samples", vopt.samples)->capture_default_str();
  ver->callback([&] {
    auto const          deg = static_cast<degree_type>(n);
    std::vector<Report> reports;
    auto                add = [&](std::vector<Report> rs) {
      reports.insert(reports.end(), rs.begin(), rs.end());
    };
    if (which == "generation" || which == "all") {
      reports.push_back(verify_generation(deg));
      reports.push_back(verify_factorization(deg));
    }
    if (which == "singular" || which == "all") {
      add(verify_singular(deg, vopt));
    }
    if (which == "full" || which == "all") {
      add(verify_full(deg, vopt));
    }
    if (which == "insn" || which == "all") {
      add(verify_insn(deg, vopt));
    }
    std::size_t failed = 0;
    for (auto const& r : reports) {
      failed += r.ok() ? 0 : 1;
      if (json) {
        std::cout << report_json(r).dump() << '\n';
      } else {
        std::printf("%-5s %-28s n=%d instances=%zu failures=%zu %.3fs %s\n",
                    r.ok() ? "PASS" : "FAIL", r.check.c_str(), int(r.n), r.instances,
                    r.failures, r.elapsed, r.detail.c_str());
        for (auto const& m : r.messages) {
          std::cout << "      " << m << '\n';
        }
      }
    }
    if (!json) {
      std::cout << reports.size() - failed << "/" << reports.size() << " checks passed\n";
    }
    status = failed == 0 ? 0 : exit_fail;
  });

  bool  count_only = false;
  auto* en         = app.add_subcommand("enumerate", "List the diagrams of P_n");
  en->add_option("-n", n, "Degree")->required()->check(CLI::Range(1, 6));
  en->add_flag("--count-only", count_only);
  en->callback([&] {
    auto const  deg   = static_cast<degree_type>(n);
    std::size_t count = 0;
    if (count_only) {
      for_each_diagram(deg, [&](Diagram const&) { ++count; });
    } else {
      for_each_diagram(deg, [&](Diagram const& d) {
        ++count;
        std::cout << (json ? ordered_json(to_string(d)).dump() : to_string(d)) << '\n';
      });
    }
    if (count_only) {
      std::cout << (json ? ordered_json{{"n", n}, {"count", count}}.dump()
                         : std::to_string(count))
                << '\n';
    }
  });

  auto* rend = app.add_subcommand("render", "ASCII picture of a diagram");
  rend->add_option("d", d1)->required();
  rend->callback([&] { std::cout << render(parse_diagram(d1)); });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  } catch (ParseError const& e) {
    std::cerr << "error: " << e.what() << " (position " << e.position() << ")\n";
    return exit_usage;
  } catch (DegreeMismatch const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (InvalidArgument const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (Exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_fail;
  }
  return status;
}
