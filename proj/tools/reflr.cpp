// reflr: refined Littlewood-Richardson coefficients c_{lambda,mu}^{nu}(w)
// by three cross-checked engines, with saturation scans, Bruhat value
// tables and the hive symmetry bijection.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "reflr/crystal.hpp"
#include "reflr/hive.hpp"
#include "reflr/partition.hpp"
#include "reflr/perm.hpp"
#include "reflr/polyring.hpp"
#include "reflr/refined.hpp"

using json = nlohmann::json;
using namespace reflr;

namespace {

Partition parse_partition(const std::string& s, int n, const std::string& name) {
  Partition p;
  if (!s.empty()) {
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) p.push_back(std::stoi(tok));
  }
  if (!is_partition(p))
    throw CLI::ValidationError(name, "must be weakly decreasing and nonnegative");
  if (static_cast<int>(p.size()) > n)
    throw CLI::ValidationError(name, "has more than n parts");
  return pad_partition(p, n);
}

Permutation parse_w(const std::string& s, int n) {
  Permutation w = parse_permutation(s);
  if (w.size() != n)
    throw CLI::ValidationError("--w", "permutation size does not match --n");
  return w;
}

json hive_json(const Hive& h) {
  json rows = json::array();
  for (const auto& r : h.labels) rows.push_back(r);
  return rows;
}

std::set<Engine> parse_engines(const std::string& s) {
  if (s == "all") return all_engines();
  std::set<Engine> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "demazure") out.insert(Engine::demazure);
    else if (tok == "crystal") out.insert(Engine::crystal);
    else if (tok == "hive") out.insert(Engine::hive);
    else throw CLI::ValidationError("--engine", "unknown engine " + tok);
  }
  if (out.empty()) throw CLI::ValidationError("--engine", "no engine selected");
  return out;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw CLI::ValidationError("--out", "cannot open " + path);
  return file;
}

int default_jobs(int jobs_flag) {
  if (jobs_flag > 0) return jobs_flag;
  if (const char* env = std::getenv("REFLR_JOBS")) {
    int j = std::atoi(env);
    if (j > 0) return j;
  }
  return 1;
}

json violation_json(const SaturationViolation& v) {
  return json{{"w", to_string(v.w)},   {"lambda", v.lam}, {"mu", v.mu},
              {"nu", v.nu},            {"k", v.k},        {"c_k", v.c_k},
              {"c_1", v.c_1}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "refined Littlewood-Richardson coefficients c(w).\n"
      "Composition convention: (u*v)(i) = u(v(i)), v acts first.\n"
      "Partitions are entered without trailing zeros and padded to n;\n"
      "permutations as digit strings (n <= 9, e.g. 2413) or comma lists."};
  app.require_subcommand(1);

  int n = 0;
  std::string lam_s, mu_s, nu_s, w_s, engine_s = "crystal", format = "json", out_path;
  std::string verify_engine_s = "all", class_s = "all", face_s;
  int kmax = 2, max_part = 2, jobs_flag = 0;
  bool timings = false, dump_poly = false, opposite = false;

  auto add_common = [&](CLI::App* cmd, bool need_tri, bool need_w) {
    cmd->add_option("--n", n, "rank: partitions padded to n parts, w in S_n")
        ->required();
    if (need_tri) {
      cmd->add_option("--lambda", lam_s, "partition lambda, e.g. 2,1")->required();
      cmd->add_option("--mu", mu_s, "partition mu")->required();
      cmd->add_option("--nu", nu_s, "partition nu")->required();
    }
    if (need_w) cmd->add_option("--w", w_s, "permutation in one-line notation")->required();
    cmd->add_option("--out", out_path, "write output to a file instead of stdout");
  };

  auto* compute = app.add_subcommand("compute", "compute c(w) and cross-check engines");
  add_common(compute, true, true);
  compute->add_option("--engine", engine_s, "all or comma list of demazure,crystal,hive");
  compute->add_option("--format", format, "json or csv");
  compute->add_flag("--timings", timings, "include per-engine wall times (not byte-stable)");
  compute->add_flag("--dump-poly", dump_poly,
                    "dump pi_w0(x^lambda kappa_{w,mu}) as [exponent, coeff] pairs");

  auto* verify = app.add_subcommand(
      "verify", "exhaustive engine cross-check over a small parameter grid");
  verify->add_option("--n", n, "rank")->required();
  verify->add_option("--max-part", max_part, "partition parts bounded by this");
  verify->add_option("--engine", verify_engine_s, "engines to compare (default all)");
  verify->add_option("--out", out_path, "output path");

  auto* table = app.add_subcommand("bruhat-table", "c(w) for every w in S_n");
  add_common(table, true, false);
  table->add_option("--engine", engine_s, "engine for the values");
  table->add_option("--format", format, "json, csv or dot");

  auto* scan = app.add_subcommand("saturation-scan", "scan a class of w for saturation violations");
  scan->add_option("--n", n, "rank")->required();
  scan->add_option("--max-part", max_part, "lambda, mu parts bounded by this");
  scan->add_option("--kmax", kmax, "check stretching factors k = 2..kmax");
  scan->add_option("--class", class_s, "312, 231, block, excluded or all");
  scan->add_option("--jobs", jobs_flag, "worker threads (REFLR_JOBS as fallback)");
  scan->add_option("--format", format, "json or ndjson");
  scan->add_option("--out", out_path, "output path");

  auto* points = app.add_subcommand("hive-points", "stream integer hives as NDJSON");
  add_common(points, true, false);
  points->add_option("--w", w_s, "stream the union over reduced faces with varpi = w0 w");
  points->add_option("--face", face_s,
                     "single face as flat positions 'i,j;i,j' (empty = whole polytope)");
  bool with_gt = false;
  points->add_flag("--gt", with_gt, "also emit the row-difference GT pattern per hive");

  auto* cdump = app.add_subcommand("crystal-dump", "dump a Demazure crystal");
  cdump->add_option("--n", n, "rank")->required();
  cdump->add_option("--mu", mu_s, "shape")->required();
  cdump->add_option("--w", w_s, "permutation")->required();
  cdump->add_flag("--opposite", opposite, "opposite crystal (raising from lowest)");
  cdump->add_option("--out", out_path, "output path");

  auto* sym = app.add_subcommand("symmetry-check",
                                 "verify the hive bijection onto (mu,lambda,nu,w0 w^-1)");
  add_common(sym, true, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  std::ofstream out_file;

  try {
    if (compute->parsed()) {
      Partition lam = parse_partition(lam_s, n, "--lambda");
      Partition mu = parse_partition(mu_s, n, "--mu");
      Partition nu = parse_partition(nu_s, n, "--nu");
      Permutation w = parse_w(w_s, n);
      std::ostream& os = open_out(out_file, out_path);
      bool degree_ok = part_sum(lam) + part_sum(mu) == part_sum(nu);
      EngineReport rep = refined_lr(lam, mu, nu, w, parse_engines(engine_s));
      if (format == "csv") {
        os << "engine,value\n";
        for (const auto& [name, v] : rep.per_engine) os << name << "," << v << "\n";
      } else {
        json j;
        j["params"] = {{"n", n},   {"lambda", lam},          {"mu", mu},
                       {"nu", nu}, {"w", to_string(w)}};
        j["engines"] = rep.per_engine;
        j["value"] = rep.value;
        j["agreement"] = rep.agreement;
        if (!degree_ok) j["note"] = "|lambda|+|mu| != |nu|, coefficient is 0";
        if (!rep.agreement) j["reproducer"] = json::parse(rep.reproducer);
        if (timings) j["timings_ms"] = rep.timings_ms;
        if (dump_poly) {
          IntPolynomial f = IntPolynomial::monomial(Exponent(lam.begin(), lam.end())) *
                            demazure_char(w, mu);
          IntPolynomial sym = pi_w0(f);
          json terms = json::array();
          for (const auto& [e, c] : sym.terms())
            terms.push_back(json::array({json(e), c.get_str()}));
          j["poly"] = terms;
        }
        os << j.dump(2) << "\n";
      }
      return rep.agreement ? 0 : 1;
    }

    if (verify->parsed()) {
      std::set<Engine> engines = parse_engines(verify_engine_s);
      std::ostream& os = open_out(out_file, out_path);
      long long instances = 0, disagreements = 0;
      auto parts = partitions_in_box(n, max_part);
      for (const Permutation& w : all_permutations(n))
        for (const Partition& lam : parts)
          for (const Partition& mu : parts) {
            int total = static_cast<int>(part_sum(lam) + part_sum(mu));
            for (const Partition& nu : partitions_of(total, n)) {
              EngineReport rep = refined_lr(lam, mu, nu, w, engines);
              ++instances;
              if (!rep.agreement) {
                ++disagreements;
                std::cerr << "disagreement: " << rep.reproducer << "\n";
              }
            }
          }
      json j{{"n", n},
             {"max_part", max_part},
             {"instances", instances},
             {"disagreements", disagreements}};
      os << j.dump(2) << "\n";
      return disagreements == 0 ? 0 : 1;
    }

    if (table->parsed()) {
      Partition lam = parse_partition(lam_s, n, "--lambda");
      Partition mu = parse_partition(mu_s, n, "--mu");
      Partition nu = parse_partition(nu_s, n, "--nu");
      std::set<Engine> engines = parse_engines(engine_s);
      BruhatTable t = bruhat_value_table(lam, mu, nu, *engines.begin());
      std::ostream& os = open_out(out_file, out_path);
      if (format == "dot") {
        os << "digraph bruhat {\n  rankdir=BT;\n";
        std::map<int, std::vector<const Permutation*>> by_len;
        for (const auto& [w, c] : t.values) by_len[length(w)].push_back(&w);
        for (const auto& [len, ws] : by_len) {
          os << "  { rank=same;";
          for (const Permutation* w : ws) os << " \"" << to_string(*w) << "\";";
          os << " }\n";
        }
        for (const auto& [w, c] : t.values)
          os << "  \"" << to_string(w) << "\" [label=\"" << to_string(w) << " : " << c
             << "\"];\n";
        for (const auto& [u, v] : t.covers)
          os << "  \"" << to_string(u) << "\" -> \"" << to_string(v) << "\";\n";
        os << "}\n";
      } else if (format == "csv") {
        os << "w,c\n";
        for (const auto& [w, c] : t.values) os << to_string(w) << "," << c << "\n";
      } else {
        json values = json::array();
        for (const auto& [w, c] : t.values)
          values.push_back({{"w", to_string(w)}, {"c", c}});
        json covers = json::array();
        for (const auto& [u, v] : t.covers)
          covers.push_back(json::array({to_string(u), to_string(v)}));
        json violations = json::array();
        if (!t.monotone) violations.push_back("monotonicity");
        if (!t.coset_constant) violations.push_back("double-coset constancy");
        json j;
        j["params"] = {{"n", n}, {"lambda", lam}, {"mu", mu}, {"nu", nu}};
        j["engine"] = engine_name(*engines.begin());
        j["values"] = values;
        j["covers"] = covers;
        j["violations"] = violations;
        os << j.dump(2) << "\n";
      }
      return (t.monotone && t.coset_constant) ? 0 : 1;
    }

    if (scan->parsed()) {
      ScanBudget budget;
      budget.n = n;
      budget.max_part = max_part;
      budget.kmax = kmax;
      budget.cls = parse_perm_class(class_s);
      budget.jobs = default_jobs(jobs_flag);
      SaturationReport rep = saturation_scan(budget);
      std::ostream& os = open_out(out_file, out_path);
      if (format == "ndjson") {
        for (const auto& v : rep.violations) os << violation_json(v).dump() << "\n";
        os << json{{"examined", rep.triples_examined},
                   {"violations", rep.violations.size()}}
                  .dump()
           << "\n";
      } else {
        json violations = json::array();
        for (const auto& v : rep.violations) violations.push_back(violation_json(v));
        json j;
        j["budget"] = {{"n", budget.n},
                       {"max_part", budget.max_part},
                       {"kmax", budget.kmax},
                       {"class", perm_class_name(budget.cls)}};
        j["examined"] = rep.triples_examined;
        j["violations"] = violations;
        os << j.dump(2) << "\n";
      }
      return rep.violations.empty() ? 0 : 1;
    }

    if (points->parsed()) {
      Partition lam = parse_partition(lam_s, n, "--lambda");
      Partition mu = parse_partition(mu_s, n, "--mu");
      Partition nu = parse_partition(nu_s, n, "--nu");
      std::ostream& os = open_out(out_file, out_path);
      std::vector<Hive> hives;
      if (!w_s.empty()) {
        Permutation w = parse_w(w_s, n);
        hives = kogan_hive_union(lam, mu, nu,
                                 compose(Permutation::longest_element(n), w));
      } else {
        KoganFace f;
        if (!face_s.empty()) {
          std::stringstream ss(face_s);
          std::string tok;
          while (std::getline(ss, tok, ';')) {
            auto comma = tok.find(',');
            if (comma == std::string::npos)
              throw CLI::ValidationError("--face", "expected 'i,j;i,j'");
            f.flats.insert({std::stoi(tok.substr(0, comma)),
                            std::stoi(tok.substr(comma + 1))});
          }
        }
        hives = enumerate_kogan_hives(lam, mu, nu, f);
      }
      for (const Hive& h : hives) {
        json line{{"labels", hive_json(h)}};
        if (with_gt) {
          json rows = json::array();
          for (const auto& r : hive_delta(h).rows) rows.push_back(r);
          line["delta"] = rows;
        }
        os << line.dump() << "\n";
      }
      return 0;
    }

    if (cdump->parsed()) {
      Partition mu = parse_partition(mu_s, n, "--mu");
      Permutation w = parse_w(w_s, n);
      DemazureCrystal crystal = demazure_crystal(mu, w, opposite);
      std::ostream& os = open_out(out_file, out_path);
      json elems = json::array();
      for (const Word& u : crystal.elements) {
        json e;
        if (n <= 9) {
          std::string s;
          for (int l : u) s += static_cast<char>('0' + l);
          e["word"] = s;
        } else {
          e["word"] = u;
        }
        Tableau t = tableau_from_word(u, crystal.shape);
        json rows = json::array();
        for (const auto& r : t.rows) rows.push_back(r);
        e["rows"] = rows;
        elems.push_back(e);
      }
      json j;
      j["shape"] = crystal.shape;
      j["w"] = to_string(w);
      j["opposite"] = opposite;
      j["size"] = crystal.elements.size();
      j["elements"] = elems;
      os << j.dump(2) << "\n";
      return 0;
    }

    if (sym->parsed()) {
      Partition lam = parse_partition(lam_s, n, "--lambda");
      Partition mu = parse_partition(mu_s, n, "--mu");
      Partition nu = parse_partition(nu_s, n, "--nu");
      Permutation w = parse_w(w_s, n);
      Permutation w0 = Permutation::longest_element(n);
      std::vector<Hive> domain = kogan_hive_union(lam, mu, nu, compose(w0, w));
      std::vector<Hive> codomain =
          kogan_hive_union(mu, lam, nu, compose(w0, inverse(w)));
      std::set<Hive> image;
      bool ok = true;
      for (const Hive& h : domain) {
        Hive hh = symmetry_map(h, lam, mu, nu, w);
        if (!image.insert(hh).second) ok = false;  // injectivity
        Hive back = symmetry_map_inverse(hh, lam, mu, nu, w);
        if (!(back == h)) ok = false;
      }
      std::set<Hive> codomain_set(codomain.begin(), codomain.end());
      if (image != codomain_set) ok = false;
      std::ostream& os = open_out(out_file, out_path);
      json j{{"domain", domain.size()},
             {"codomain", codomain.size()},
             {"bijective", ok}};
      os << j.dump(2) << "\n";
      return ok ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
