// command-line front end: elementary divisors, equivalence decisions,
// commutant reports, permutation pipelines and the homological reports
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cma/centralizer.hpp"
#include "cma/homlab.hpp"
#include "cma/perm.hpp"

using nlohmann::json;

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cma::Error("FileNotFound", "cannot open " + path);
  json j;
  in >> j;
  return j;
}

/// dispatch on the "field" entry of a matrix JSON document
template <class F>
int with_matrix(const json& doc, F&& f) {
  cma::FieldSpec fs = cma::FieldSpec::from_json(doc.at("field"));
  if (fs.kind == cma::FieldSpec::Kind::PrimeField) {
    auto ctx = cma::field_traits<cma::Fp>::ctx(fs);
    return f(ctx, cma::matrix_from_json<cma::Fp>(ctx, doc));
  }
  auto ctx = cma::field_traits<cma::Rat>::ctx(fs);
  return f(ctx, cma::matrix_from_json<cma::Rat>(ctx, doc));
}

std::uint64_t seed_from_env() {
  if (const char* s = std::getenv("CMA_SEED")) return std::strtoull(s, nullptr, 10);
  return 0;
}

cma::CycleType parse_cycle_type(const std::string& s) {
  cma::CycleType t;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) t.push_back(std::stoi(item));
  std::sort(t.begin(), t.end(), std::greater<int>());
  cma::validate_cycle_type(t);
  return t;
}

struct Options {
  std::uint64_t seed = 0;
  std::string format = "json";
};

int cmd_eldiv(const std::string& path, const Options& opt) {
  return with_matrix(read_json_file(path), [&](const auto& ctx, const auto& m) {
    std::cout << cma::eldiv_to_json(cma::elementary_divisors(m, ctx, opt.seed)).dump(2) << "\n";
    return 0;
  });
}

template <class S>
int sequiv_exit(const cma::FieldCtx<S>& ctx, const cma::MatrixX<S>& a, const cma::MatrixX<S>& b,
                bool strict, std::uint64_t seed, json& out) {
  auto ea = cma::elementary_divisors(a, ctx, seed);
  auto eb = cma::elementary_divisors(b, ctx, seed);
  auto v = cma::s_equivalent(ea, eb, ctx, strict);
  out = cma::verdict_to_json(v);
  return v.equivalent ? 0 : 1;
}

int cmd_sequiv(const std::string& pa, const std::string& pb, bool strict, const Options& opt) {
  json da = read_json_file(pa), db = read_json_file(pb);
  return with_matrix(da, [&](const auto& ctx, const auto& a) {
    using S = typename std::decay_t<decltype(a)>::Scalar;
    if (!(cma::FieldSpec::from_json(db.at("field")) == ctx.spec()))
      throw cma::Error("FieldMismatch", "the two matrices live over different fields");
    auto b = cma::matrix_from_json<S>(ctx, db);
    json out;
    int code = sequiv_exit<S>(ctx, a, b, strict, opt.seed, out);
    std::cout << out.dump(2) << "\n";
    return code;
  });
}

int cmd_sequiv_batch(const std::string& path, bool strict, const Options& opt) {
  json pairs = read_json_file(path);
  std::vector<std::future<json>> tasks;
  for (const auto& entry : pairs) {
    tasks.push_back(std::async(std::launch::async, [entry, strict, &opt]() {
      json out;
      with_matrix(entry.at("a"), [&](const auto& ctx, const auto& a) {
        using S = typename std::decay_t<decltype(a)>::Scalar;
        auto b = cma::matrix_from_json<S>(ctx, entry.at("b"));
        sequiv_exit<S>(ctx, a, b, strict, opt.seed, out);
        return 0;
      });
      return out;
    }));
  }
  json results = json::array();
  for (auto& t : tasks) results.push_back(t.get()); // input order, not completion order
  std::cout << results.dump(2) << "\n";
  return 0;
}

int cmd_report(const std::string& path, bool oracle, const Options& opt) {
  return with_matrix(read_json_file(path), [&](const auto& ctx, const auto& m) {
    auto rep = cma::decompose(m, ctx, opt.seed);
    json j = cma::report_to_json(rep);
    if (oracle) {
      int dim = cma::brute_force_centralizer_dim(m, ctx);
      j["oracle_dim"] = dim;
      j["oracle_match"] = (dim == rep.total_dim);
    }
    if (opt.format == "table") {
      std::cout << cma::report_to_table(rep);
      if (oracle) std::cout << "brute-force dim " << j["oracle_dim"] << " match "
                            << (j["oracle_match"].get<bool>() ? "yes" : "no") << "\n";
    } else {
      std::cout << j.dump(2) << "\n";
    }
    if (oracle && !j["oracle_match"].get<bool>()) return 1;
    return 0;
  });
}

json perm_side_json(const cma::CycleType& t, std::uint32_t p, bool singular,
                    const Options& opt) {
  cma::PermClassData d = cma::perm_class_data(t, p);
  json j = cma::perm_class_to_json(d);
  cma::CycleType use = singular ? d.singular_type : d.type;
  if (p == 0) {
    auto ctx = cma::field_traits<cma::Rat>::ctx(cma::FieldSpec::rationals());
    j["eldiv"] = cma::eldiv_to_json(cma::perm_elementary_divisors<cma::Rat>(use, ctx, opt.seed));
  } else {
    auto ctx = cma::field_traits<cma::Fp>::ctx(cma::FieldSpec::prime(p));
    j["eldiv"] = cma::eldiv_to_json(cma::perm_elementary_divisors<cma::Fp>(use, ctx, opt.seed));
  }
  return j;
}

int cmd_perm(const std::string& type_str, const std::string& in_path, std::uint32_t p,
             bool singular, bool pair, const std::string& a_str, const std::string& b_str,
             const Options& opt) {
  if (pair) {
    if (p == 0) throw cma::Error("InvalidField", "--pair needs a prime characteristic");
    auto ctx = cma::field_traits<cma::Fp>::ctx(cma::FieldSpec::prime(p));
    cma::CycleType ta = parse_cycle_type(a_str), tb = parse_cycle_type(b_str);
    cma::CycleType ua = singular ? cma::perm_class_data(ta, p).singular_type : ta;
    cma::CycleType ub = singular ? cma::perm_class_data(tb, p).singular_type : tb;
    auto ea = cma::perm_elementary_divisors<cma::Fp>(ua, ctx, opt.seed);
    auto eb = cma::perm_elementary_divisors<cma::Fp>(ub, ctx, opt.seed);
    auto v = cma::s_equivalent(ea, eb, ctx);
    json j = cma::verdict_to_json(v);
    j["a"] = cma::perm_class_to_json(cma::perm_class_data(ta, p));
    j["b"] = cma::perm_class_to_json(cma::perm_class_data(tb, p));
    std::cout << j.dump(2) << "\n";
    return v.equivalent ? 0 : 1;
  }
  cma::CycleType t;
  if (!in_path.empty()) {
    t = cma::cycle_type(cma::permutation_from_json(read_json_file(in_path)));
  } else if (!type_str.empty()) {
    t = parse_cycle_type(type_str);
  } else {
    throw cma::Error("InvalidArgument", "perm needs --cycle-type, --in, or --pair");
  }
  json j = perm_side_json(t, p, singular, opt);
  if (opt.format == "table") {
    std::cout << "cycle type:";
    for (int x : j["cycle_type"]) std::cout << " " << x;
    std::cout << "\nsingular part:";
    for (int x : j["singular_part_type"]) std::cout << " " << x;
    std::cout << "\nexceptional exponent: " << j["exceptional"] << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_homdim(const std::string& in_path, const std::string& block_str, const Options& opt) {
  if (!block_str.empty()) {
    // n,u,p,E with E colon-separated, e.g. 4,1,3,2:4
    std::stringstream ss(block_str);
    std::string item;
    std::vector<std::string> parts;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (parts.size() != 4)
      throw cma::Error("InvalidArgument", "--block expects n,u,p,E (E colon-separated)");
    cma::NakayamaData u(static_cast<std::uint32_t>(std::stoul(parts[2])), std::stoi(parts[1]),
                        std::stoi(parts[0]));
    std::vector<int> exps;
    std::stringstream es(parts[3]);
    while (std::getline(es, item, ':')) exps.push_back(std::stoi(item));
    cma::GeneratorModule m(u.n, exps);
    std::cout << cma::homdim_to_json(cma::homdim_report(u, m, 64, opt.seed), u, m).dump(2)
              << "\n";
    return 0;
  }
  json doc = read_json_file(in_path);
  cma::FieldSpec fs = cma::FieldSpec::from_json(doc.at("field"));
  if (fs.kind != cma::FieldSpec::Kind::PrimeField)
    throw cma::Error("InvalidField", "homological reports need a prime field");
  auto ctx = cma::field_traits<cma::Fp>::ctx(fs);
  auto rep = cma::decompose(cma::matrix_from_json<cma::Fp>(ctx, doc), ctx, opt.seed);
  json blocks = json::array();
  for (const auto& b : rep.blocks) {
    cma::NakayamaData u(fs.p, b.irr.degree(), b.n_i);
    cma::GeneratorModule m(b.n_i, b.distinct_exps);
    json j = cma::homdim_to_json(cma::homdim_report(u, m, 64, opt.seed), u, m);
    j["irr"] = cma::to_display(b.irr);
    blocks.push_back(j);
  }
  std::cout << json{{"blocks", blocks}}.dump(2) << "\n";
  return 0;
}

int cmd_oracle(std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
  int pass = 0, fail = 0;
  auto record = [&](bool ok) { (ok ? pass : fail)++; };
  for (int trial = 0; trial < trials; ++trial) {
    std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5}[rng() % 3];
    auto ctx = cma::field_traits<cma::Fp>::ctx(cma::FieldSpec::prime(p));
    int n = 2 + static_cast<int>(rng() % 5);
    cma::MatrixX<cma::Fp> c(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) c(i, j) = cma::field_traits<cma::Fp>::random(ctx, rng);
    // dimension formula against the brute-force kernel
    auto rep = cma::decompose(c, ctx, seed);
    record(rep.total_dim == cma::brute_force_centralizer_dim(c, ctx));
    // self-equivalence and J-involution
    auto e = cma::elementary_divisors(c, ctx, seed);
    record(cma::s_equivalent(e, e, ctx).equivalent);
    for (const auto& g : e.groups) {
      auto t = g.distinct_exps();
      record(cma::j_transform(cma::j_transform(t)) == t);
    }
    // closed-form permutation divisors against the Smith normal form
    cma::CycleType ct;
    int rem = n;
    while (rem > 0) {
      int part = 1 + static_cast<int>(rng() % rem);
      ct.push_back(part);
      rem -= part;
    }
    std::sort(ct.begin(), ct.end(), std::greater<int>());
    auto formula = cma::perm_elementary_divisors<cma::Fp>(ct, ctx, seed);
    auto snf =
        cma::elementary_divisors(cma::permutation_matrix<cma::Fp>(cma::permutation_of_type(ct), ctx),
                                 ctx, seed);
    record(formula == snf);
  }
  std::cout << json{{"pass", pass}, {"fail", fail}, {"trials", trials}}.dump(2) << "\n";
  return fail == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"centralizer matrix algebra toolkit"};
  app.require_subcommand(1);

  Options opt;
  opt.seed = seed_from_env();
  app.add_option("--seed", opt.seed, "seed for randomized internals");
  app.add_option("--format", opt.format, "output format: json or table")
      ->check(CLI::IsMember({"json", "table"}));

  std::string in_path, a_path, b_path, pairs_path, cycle_str, block_str;
  bool strict = false, oracle_flag = false, singular = false, pair = false;
  std::uint32_t p_char = 0;
  int trials = 100;

  auto* eldiv = app.add_subcommand("eldiv", "elementary divisors of a matrix");
  eldiv->add_option("--in", in_path, "matrix JSON file")->required();

  auto* sequiv = app.add_subcommand("sequiv", "decide stable equivalence of two matrices");
  sequiv->add_option("--a", a_path, "first matrix JSON file");
  sequiv->add_option("--b", b_path, "second matrix JSON file");
  sequiv->add_option("--pairs", pairs_path, "batch file: array of {a, b} matrix pairs");
  sequiv->add_flag("--strict", strict, "require equal power-index sets");

  auto* report = app.add_subcommand("report", "block structure of the commutant");
  report->add_option("--in", in_path, "matrix JSON file")->required();
  report->add_flag("--oracle", oracle_flag, "cross-check the dimension by brute force");

  auto* perm = app.add_subcommand("perm", "permutation matrix pipeline");
  perm->add_option("--cycle-type", cycle_str, "comma-separated cycle type, e.g. 6,2");
  perm->add_option("--in", in_path, "permutation JSON ({cycles,n} or {cycle_type,n})");
  perm->add_option("--p", p_char, "characteristic (0 or prime)");
  perm->add_flag("--singular", singular, "use the p-singular parts");
  perm->add_flag("--pair", pair, "compare two cycle types end to end");
  perm->add_option("--a", a_path, "first cycle type (with --pair)");
  perm->add_option("--b", b_path, "second cycle type (with --pair)");

  auto* homdim = app.add_subcommand("homdim", "homological dimensions per block");
  homdim->add_option("--in", in_path, "matrix JSON file over a prime field");
  homdim->add_option("--block", block_str, "block descriptor n,u,p,E (E colon-separated)");

  auto* oracle = app.add_subcommand("oracle", "randomized property suites");
  oracle->add_option("--trials", trials, "number of random trials");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough(); // allow trailing global flags

  CLI11_PARSE(app, argc, argv);

  try {
    if (eldiv->parsed()) return cmd_eldiv(in_path, opt);
    if (sequiv->parsed()) {
      if (!pairs_path.empty()) return cmd_sequiv_batch(pairs_path, strict, opt);
      if (a_path.empty() || b_path.empty())
        throw cma::Error("InvalidArgument", "sequiv needs --a and --b, or --pairs");
      return cmd_sequiv(a_path, b_path, strict, opt);
    }
    if (report->parsed()) return cmd_report(in_path, oracle_flag, opt);
    if (perm->parsed()) return cmd_perm(cycle_str, in_path, p_char, singular, pair, a_path,
                                        b_path, opt);
    if (homdim->parsed()) return cmd_homdim(in_path, block_str, opt);
    if (oracle->parsed()) return cmd_oracle(opt.seed, trials);
  } catch (const cma::Error& e) {
    std::cout << json{{"error", e.code()}, {"message", e.what()}}.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << json{{"error", "Error"}, {"message", e.what()}}.dump(2) << "\n";
    return 2;
  }
  return 2;
}
