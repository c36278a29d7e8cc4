// Command-line front end: validate fan files, search for usable cone
// orders, and print presentations, normal forms, multiplication
// tables, Betti numbers, and self-check reports.  Exit codes: 0 on
// success, 1 for a mathematical finding (invalid fan, failed check),
// 2 for usage or parse errors.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fanring/catalog.hpp"
#include "fanring/errors.hpp"
#include "fanring/expr.hpp"
#include "fanring/oracle.hpp"
#include "fanring/presentation.hpp"
#include "fanring/reducer.hpp"
#include "fanring/ringops.hpp"
#include "fanring/serialize.hpp"

namespace {

using namespace fanring;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) throw input_error("cannot read file " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Mode parse_mode(const std::string& s) {
  if (s == "additive") return Mode::additive;
  if (s == "multiplicative") return Mode::multiplicative;
  throw input_error("mode must be additive or multiplicative");
}

FanFile load(const std::string& path) {
  FanFile file = parse_fan_file(slurp(path));
  ValidationReport report = validate(file.fan);
  if (!report.ok()) {
    for (const auto& line : report.diagnostics)
      std::cerr << line << "\n";
    throw unsupported_fan_error("fan fails validation");
  }
  return file;
}

// Stored order first, then a search that prefers orders satisfying
// both conditions but settles for (*).
ShellingData order_for(const FanFile& file, unsigned seed) {
  if (file.order) return make_shelling_data(file.fan, *file.order);
  SearchOptions opts;
  opts.seed = seed;
  SearchResult found = find_shelling(file.fan, opts);
  if (found.status != SearchStatus::found) {
    opts.require_star_prime = false;
    found = find_shelling(file.fan, opts);
  }
  if (found.status != SearchStatus::found)
    throw unsupported_fan_error("no usable cone order found");
  return *found.data;
}

SpecializationTarget parse_target(const std::string& spec, Mode mode, int n) {
  auto integer = [](const std::string& s) {
    if (s.empty()) throw input_error("empty value in specialization");
    std::size_t at = 0;
    long v = 0;
    try {
      v = std::stol(s, &at);
    } catch (const std::exception&) {
      throw input_error("bad integer \"" + s + "\" in specialization");
    }
    if (at != s.size())
      throw input_error("bad integer \"" + s + "\" in specialization");
    return v;
  };
  if (spec.rfind("r=", 0) == 0)
    return SpecializationTarget::all_equal(mode, n, integer(spec.substr(2)));
  std::vector<bool> seen(n, false);
  std::vector<Int> values(n, 0);
  std::istringstream parts(spec);
  std::string part;
  while (std::getline(parts, part, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos || part.empty() || part[0] != 'r')
      throw input_error("specialization entries look like r1=2");
    int idx = static_cast<int>(integer(part.substr(1, eq - 1)));
    if (idx < 1 || idx > n)
      throw input_error("unknown parameter r" + std::to_string(idx));
    if (seen[idx - 1])
      throw input_error("parameter r" + std::to_string(idx) +
                        " assigned twice");
    seen[idx - 1] = true;
    values[idx - 1] = integer(part.substr(eq + 1));
  }
  for (int i = 0; i < n; ++i)
    if (!seen[i])
      throw input_error("specialization must assign every parameter");
  return SpecializationTarget::integers(mode, std::move(values));
}

int cmd_validate(const std::string& path) {
  FanFile file = parse_fan_file(slurp(path));
  ValidationReport report = validate(file.fan);
  for (const auto& line : report.diagnostics) std::cout << line << "\n";
  if (!report.ok()) {
    std::cout << "invalid fan\n";
    return 1;
  }
  std::cout << "smooth complete fan, d=" << file.fan.ray_count()
            << ", m=" << file.fan.max_cone_count() << "\n";
  return 0;
}

int cmd_order(const std::string& path, bool require_star_prime, unsigned seed,
              bool exhaustive) {
  FanFile file = parse_fan_file(slurp(path));
  ValidationReport report = validate(file.fan);
  if (!report.complete) {
    std::cerr << "ordering requires complete fan\n";
    return 1;
  }
  if (!report.ok()) {
    for (const auto& line : report.diagnostics) std::cerr << line << "\n";
    return 1;
  }
  if (exhaustive) {
    OrderCensus census = enumerate_orders(file.fan);
    std::cout << "orders: " << census.total << " total, " << census.star_ok
              << " with (*), " << census.both_ok << " with (*) and (*')\n";
    return 0;
  }
  SearchOptions opts;
  opts.require_star_prime = require_star_prime;
  opts.seed = seed;
  SearchResult found = find_shelling(file.fan, opts);
  if (found.status != SearchStatus::found) {
    std::cerr << "no order found"
              << (found.status == SearchStatus::inconclusive
                      ? " within the search budget"
                      : "")
              << "\n";
    return 1;
  }
  std::cout << "order:";
  for (int v : found.data->order) std::cout << ' ' << v + 1;
  std::cout << "\n(*) " << (found.data->star_ok ? "ok" : "no") << ", (*') "
            << (found.data->star_prime_ok ? "ok" : "no") << "\n";
  return 0;
}

int cmd_present(const std::string& path, const std::string& mode_name,
                unsigned seed) {
  FanFile file = load(path);
  ShellingData data = order_for(file, seed);
  Mode mode = parse_mode(mode_name);
  Presentation pres = mode == Mode::additive
                          ? build_additive(file.fan, data)
                          : build_multiplicative(file.fan, data);
  std::cout << write_presentation(pres) << "\n";
  return 0;
}

int cmd_reduce(const std::string& path, const std::string& mode_name,
               const std::string& poly, unsigned seed) {
  FanFile file = load(path);
  ShellingData data = order_for(file, seed);
  Mode mode = parse_mode(mode_name);
  XPolynomial p =
      parse_poly_expr(poly, mode, file.fan.ray_count(), file.fan.dim);
  Reducer red(file.fan, data, mode);
  std::cout << write_normal_form(red.reduce(p), data) << "\n";
  return 0;
}

int cmd_table(const std::string& path, const std::string& mode_name,
              const std::string& spec, bool text, unsigned seed, int jobs) {
  FanFile file = load(path);
  ShellingData data = order_for(file, seed);
  Mode mode = parse_mode(mode_name);
  MultTable table = mult_table(file.fan, data, mode, jobs);
  if (!spec.empty()) {
    SpecializationTarget target = parse_target(spec, mode, file.fan.dim);
    std::cout << write_spec_table(specialize(table, target), target) << "\n";
    return 0;
  }
  if (text)
    std::cout << table_text(table, data);
  else
    std::cout << write_mult_table(table, data) << "\n";
  return 0;
}

int cmd_betti(const std::string& path, unsigned seed) {
  FanFile file = load(path);
  ShellingData data = order_for(file, seed);
  std::vector<int> b = betti(file.fan, data);
  for (std::size_t i = 0; i < b.size(); ++i)
    std::cout << (i ? " " : "") << b[i];
  std::cout << "\n";
  return 0;
}

int cmd_check(const std::string& path, const std::string& mode_name,
              int samples, unsigned seed) {
  FanFile file = load(path);
  ShellingData data = order_for(file, seed);
  const Fan& fan = file.fan;
  bool all_ok = true;
  auto report = [&](const std::string& name, bool ok) {
    std::cout << name << ": " << (ok ? "ok" : "FAIL") << "\n";
    all_ok = all_ok && ok;
  };

  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> nterms(1, 4);
  std::uniform_int_distribution<int> xdeg(0, 4);
  std::uniform_int_distribution<int> rdeg(0, 2);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> var(0, fan.ray_count() - 1);
  std::uniform_int_distribution<int> rvar(0, fan.dim - 1);
  std::uniform_int_distribution<int> flip(0, 1);
  auto random_poly = [&](Mode m) {
    XPolynomial p(m, fan.ray_count(), fan.dim);
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
      std::vector<int> e(fan.ray_count(), 0);
      int deg = xdeg(rng);
      for (int j = 0; j < deg; ++j) ++e[var(rng)];
      std::vector<int> re(fan.dim, 0);
      int rd = rdeg(rng);
      for (int j = 0; j < rd; ++j)
        re[rvar(rng)] += (m == Mode::multiplicative && flip(rng)) ? -1 : 1;
      Int c = coef(rng);
      if (c == 0) c = 1;
      CoeffElem ce(m, fan.dim);
      ce.add_term(std::move(re), c);
      p.add_term(std::move(e), std::move(ce));
    }
    return p;
  };

  bool run_add = mode_name.empty() || mode_name == "additive";
  bool run_mul = mode_name.empty() || mode_name == "multiplicative";
  if (!run_add && !run_mul) parse_mode(mode_name);

  if (run_add) {
    Reducer red(fan, data, Mode::additive);
    AdditiveOracle oracle(fan, data);
    bool dims = true;
    for (int k = 0; k <= fan.dim + 2; ++k)
      dims = dims && oracle.quotient_dimension(k) == oracle.predicted_dimension(k);
    report("additive ranks", dims);
    bool agree = true;
    for (int t = 0; t < samples; ++t) {
      XPolynomial p = random_poly(Mode::additive);
      agree = agree && oracle.reduce(p) == red.reduce(p);
    }
    report("additive agreement (" + std::to_string(samples) + " samples)",
           agree);
  }
  if (run_mul) {
    Reducer red(fan, data, Mode::multiplicative);
    MultiplicativeOracle oracle(fan, data, seed);
    report("multiplicative rank", oracle.stable_dimension() == data.size());
    bool agree = true;
    for (int t = 0; t < samples; ++t) {
      XPolynomial p = random_poly(Mode::multiplicative);
      agree = agree && oracle.reduce(p) == oracle.specialize(red.reduce(p));
    }
    report("multiplicative agreement (" + std::to_string(samples) +
               " samples)",
           agree);
  }
  if (data.star_prime_ok) {
    report("duality", duality_check(fan, data).ok());
  } else {
    std::cout << "duality: skipped, order lacks (*')\n";
  }
  for (Mode m : {Mode::additive, Mode::multiplicative}) {
    if ((m == Mode::additive && !run_add) ||
        (m == Mode::multiplicative && !run_mul))
      continue;
    MultTable table = mult_table(fan, data, m);
    std::uniform_int_distribution<int> pick(0, table.size - 1);
    bool sym = true;
    for (int i = 0; i < table.size; ++i)
      for (int j = 0; j < i; ++j)
        sym = sym && table.at(i, j) == table.at(j, i);
    bool assoc = true;
    for (int t = 0; t < 50; ++t) {
      NormalForm a(m, fan.dim, table.size), b = a, c = a;
      a.coeffs[pick(rng)] = CoeffElem::constant(m, fan.dim, 1);
      b.coeffs[pick(rng)] = CoeffElem::constant(m, fan.dim, 1);
      c.coeffs[pick(rng)] = CoeffElem::constant(m, fan.dim, 1);
      assoc = assoc && table_mul(table, table_mul(table, a, b), c) ==
                           table_mul(table, a, table_mul(table, b, c));
    }
    report(to_string(m) + " table symmetry", sym);
    report(to_string(m) + " table associativity (50 triples)", assoc);
  }
  return all_ok ? 0 : 1;
}

int cmd_catalog(const std::string& name) {
  if (name.empty()) {
    for (const auto& entry_name : catalog::names())
      std::cout << entry_name << "\n";
    return 0;
  }
  const auto& e = catalog::entry(name);
  std::cout << write_fan_file({e.fan, e.order, e.name}) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cohomology and K-theory rings of toric bundles"};
  app.require_subcommand(1);

  std::string path, mode, poly, spec, name;
  bool require_star_prime = false, exhaustive = false, text = false;
  unsigned seed = 0;
  int samples = 100, jobs = 1;

  auto* validate_cmd = app.add_subcommand("validate", "Check a fan file");
  validate_cmd->add_option("path", path)->required();

  auto* order_cmd =
      app.add_subcommand("order", "Find a maximal-cone order for a fan");
  order_cmd->add_option("path", path)->required();
  order_cmd->add_flag("--require-star-prime", require_star_prime,
                      "Only accept orders satisfying (*) and (*')");
  order_cmd->add_option("--seed", seed, "Search seed");
  order_cmd->add_flag("--exhaustive", exhaustive,
                      "Count all orders instead of searching for one");

  auto* present_cmd =
      app.add_subcommand("present", "Print the generating relations");
  present_cmd->add_option("path", path)->required();
  present_cmd->add_option("--mode", mode)->required();
  present_cmd->add_option("--seed", seed, "Order search seed");

  auto* reduce_cmd =
      app.add_subcommand("reduce", "Reduce a polynomial to its normal form");
  reduce_cmd->add_option("path", path)->required();
  reduce_cmd->add_option("--mode", mode)->required();
  reduce_cmd->add_option("--poly", poly)->required();
  reduce_cmd->add_option("--seed", seed, "Order search seed");

  auto* table_cmd =
      app.add_subcommand("table", "Print the basis multiplication table");
  table_cmd->add_option("path", path)->required();
  table_cmd->add_option("--mode", mode)->required();
  table_cmd->add_option("--specialize", spec,
                        "Assign integers to the parameters, e.g. r=0 or "
                        "r1=2,r2=-1");
  table_cmd->add_flag("--text", text, "Human-readable rendering");
  table_cmd->add_option("--seed", seed, "Order search seed");
  table_cmd->add_option("--jobs", jobs, "Worker threads for the table fill");

  auto* betti_cmd = app.add_subcommand("betti", "Print even Betti numbers");
  betti_cmd->add_option("path", path)->required();
  betti_cmd->add_option("--seed", seed, "Order search seed");

  auto* check_cmd = app.add_subcommand(
      "check", "Cross-check the reducer against independent rank counts");
  check_cmd->add_option("path", path)->required();
  check_cmd->add_option("--mode", mode, "Restrict to one mode");
  check_cmd->add_option("--samples", samples, "Random polynomials per mode");
  check_cmd->add_option("--seed", seed, "Randomness seed");

  auto* catalog_cmd =
      app.add_subcommand("catalog", "List built-in fans or print one");
  catalog_cmd->add_option("name", name, "Fan to print as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(path);
    if (order_cmd->parsed())
      return cmd_order(path, require_star_prime, seed, exhaustive);
    if (present_cmd->parsed()) return cmd_present(path, mode, seed);
    if (reduce_cmd->parsed()) return cmd_reduce(path, mode, poly, seed);
    if (table_cmd->parsed())
      return cmd_table(path, mode, spec, text, seed, jobs);
    if (betti_cmd->parsed()) return cmd_betti(path, seed);
    if (check_cmd->parsed()) return cmd_check(path, mode, samples, seed);
    if (catalog_cmd->parsed()) return cmd_catalog(name);
  } catch (const parse_error& e) {
    std::cerr << "parse error at byte " << e.offset << ": " << e.what()
              << "\n";
    return 2;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const mode_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const specialization_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << "finding: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
