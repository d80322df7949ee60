// qtheta command-line front end: series expansion, q-Fibonacci polynomial
// construction, partition enumeration, and the identity audit engine.
//
// Exit codes: 0 = success / all verdicts hold, 1 = at least one verdict
// fails, 2 = usage or configuration error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtheta/audit.hpp"
#include "qtheta/format.hpp"
#include "qtheta/oracle.hpp"
#include "qtheta/partitions.hpp"
#include "qtheta/qfib.hpp"
#include "qtheta/theta.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qtheta;

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw Error("unknown format: " + s + " (expected text, json or csv)");
}

audit::Params parse_params(const std::string& spec) {
  audit::Params out;
  if (spec.empty()) return out;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t comma = spec.find(',', pos);
    if (comma == std::string::npos) comma = spec.size();
    const std::string item = spec.substr(pos, comma - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw Error("bad --params entry: " + item + " (expected name=integer)");
    try {
      out.emplace_back(item.substr(0, eq), std::stoll(item.substr(eq + 1)));
    } catch (const std::exception&) {
      throw Error("bad --params value in: " + item);
    }
    pos = comma + 1;
  }
  return out;
}

int run_expand(const std::string& id, long long order, Format format) {
  const ProductEntry& entry = find_product(id);
  if (entry.series) {
    const QSeries s = entry.series(order);
    switch (format) {
      case Format::Text:
        std::cout << format_series_pairs(s) << "\n";
        break;
      case Format::Csv:
        std::cout << "exponent,coefficient\n";
        for (long long e = s.valuation(); e < s.order(); ++e) {
          const BigInt c = s.coefficient_at(e);
          if (c != 0) std::cout << e << ',' << c.str() << "\n";
        }
        break;
      case Format::Json:
        for (long long e = s.valuation(); e < s.order(); ++e) {
          const BigInt c = s.coefficient_at(e);
          if (c == 0) continue;
          ordered_json j;
          j["exponent"] = e;
          j["coefficient"] = c.str();
          std::cout << j.dump() << "\n";
        }
        break;
    }
    return 0;
  }
  const QYSeries s = entry.yseries(order);
  for (long long e = s.valuation(); e < s.order(); ++e) {
    const YPolynomial c = s.coefficient_at(e);
    if (c.is_zero()) continue;
    const std::string rendered = format_y_polynomial(c);
    switch (format) {
      case Format::Text:
        std::cout << '(' << e << ',' << rendered << ')';
        break;
      case Format::Csv:
        if (e == s.valuation()) std::cout << "exponent,coefficient\n";
        std::cout << e << ",\"" << rendered << "\"\n";
        break;
      case Format::Json: {
        ordered_json j;
        j["exponent"] = e;
        j["coefficient"] = rendered;
        std::cout << j.dump() << "\n";
        break;
      }
    }
  }
  if (format == Format::Text) std::cout << "\n";
  return 0;
}

struct QfibOptions {
  long long n = 0;
  std::string route = "rec";
  std::string variant = "offset0";
  std::string closedKind = "doubled-triangular";
  bool evalQ1 = false;
};

RecurrenceVariant parse_variant(const std::string& s) {
  if (s == "offset0") return {0};
  if (s == "offset-1") return {-1};
  if (s == "offset-2") return {-2};
  throw Error("unknown variant: " + s +
              " (expected offset0, offset-1 or offset-2)");
}

ClosedKind parse_closed_kind(const std::string& s) {
  if (s == "triangular") return ClosedKind::Triangular;
  if (s == "square") return ClosedKind::Square;
  if (s == "doubled-triangular") return ClosedKind::DoubledTriangular;
  throw Error("unknown closed kind: " + s);
}

void print_polynomial(const QPolynomial& p, const QfibOptions& opt,
                      Format format) {
  if (opt.evalQ1) {
    const BigInt v = evaluate_at_one(p);
    if (format == Format::Json) {
      ordered_json j;
      j["n"] = opt.n;
      j["route"] = opt.route;
      j["valueAtOne"] = v.str();
      std::cout << j.dump() << "\n";
    } else {
      std::cout << v.str() << "\n";
    }
    return;
  }
  switch (format) {
    case Format::Text:
      std::cout << format_polynomial(p) << "\n";
      break;
    case Format::Csv:
      std::cout << "exponent,coefficient\n";
      for (long long e = 0; e <= p.degree(); ++e)
        if (p.coefficient(e) != 0)
          std::cout << e << ',' << p.coefficient(e).str() << "\n";
      break;
    case Format::Json: {
      ordered_json j;
      j["n"] = opt.n;
      j["route"] = opt.route;
      j["polynomial"] = format_polynomial(p);
      std::cout << j.dump() << "\n";
      break;
    }
  }
}

int run_qfib(const QfibOptions& opt, Format format) {
  if (opt.route == "two-var") {
    const QYPolynomial p = fib_two_var(opt.n, parse_variant(opt.variant));
    if (opt.evalQ1) {
      const YPolynomial v = evaluate_at_one(p);
      std::cout << format_y_polynomial(v) << "\n";
      return 0;
    }
    if (format == Format::Json) {
      ordered_json j;
      j["n"] = opt.n;
      j["route"] = opt.route;
      j["polynomial"] = format_bivariate(p);
      std::cout << j.dump() << "\n";
    } else {
      std::cout << format_bivariate(p) << "\n";
    }
    return 0;
  }
  QPolynomial p;
  if (opt.route == "rec") {
    p = fib_rec(opt.n, parse_variant(opt.variant));
  } else if (opt.route == "closed") {
    p = fib_closed(opt.n, parse_closed_kind(opt.closedKind));
  } else if (opt.route == "genfun") {
    p = fib_genfun(opt.n);
  } else {
    throw Error("unknown route: " + opt.route +
                " (expected rec, closed, genfun or two-var)");
  }
  print_polynomial(p, opt, format);
  return 0;
}

struct PartitionOptions {
  int n = 0;
  std::string cls = "all";
  std::string stat = "none";
  bool signedWeight = false;
};

PartitionClass parse_class(const std::string& s) {
  if (s == "all") return PartitionClass::All;
  if (s == "distinct") return PartitionClass::Distinct;
  throw Error("unknown partition class: " + s);
}

Statistic parse_statistic(const std::string& s) {
  if (s == "none") return Statistic::None;
  if (s == "num-parts") return Statistic::NumParts;
  if (s == "num-even-parts") return Statistic::NumEvenParts;
  throw Error("unknown statistic: " + s);
}

int run_partitions(const PartitionOptions& opt, Format format) {
  const PartitionClass cls = parse_class(opt.cls);
  const Statistic stat = parse_statistic(opt.stat);
  if (stat != Statistic::None || opt.signedWeight) {
    const StatisticSpec spec{
        stat, opt.signedWeight ? Statistic::NumEvenParts : Statistic::None};
    const YPolynomial count = weighted_count(opt.n, cls, spec);
    const std::string rendered = format_y_polynomial(count);
    switch (format) {
      case Format::Text:
        std::cout << rendered << "\n";
        break;
      case Format::Csv:
        std::cout << "n,count\n" << opt.n << ",\"" << rendered << "\"\n";
        break;
      case Format::Json: {
        ordered_json j;
        j["n"] = opt.n;
        j["class"] = opt.cls;
        j["count"] = rendered;
        std::cout << j.dump() << "\n";
        break;
      }
    }
    return 0;
  }

  check_partition_ceiling(opt.n, default_partition_ceiling());
  if (format == Format::Csv) std::cout << "size,num_parts,num_even_parts,parts\n";
  for_each_partition(opt.n, cls, [&](const std::vector<int>& parts, int even) {
    switch (format) {
      case Format::Text: {
        if (parts.empty()) {
          std::cout << "-\n";
          return;
        }
        std::string row;
        for (std::size_t i = 0; i < parts.size(); ++i) {
          if (i > 0) row += ' ';
          row += std::to_string(parts[i]);
        }
        std::cout << row << "\n";
        break;
      }
      case Format::Csv: {
        std::string joined;
        for (std::size_t i = 0; i < parts.size(); ++i) {
          if (i > 0) joined += '+';
          joined += std::to_string(parts[i]);
        }
        std::cout << opt.n << ',' << parts.size() << ',' << even << ','
                  << joined << "\n";
        break;
      }
      case Format::Json: {
        ordered_json j;
        j["parts"] = parts;
        j["size"] = opt.n;
        j["numParts"] = parts.size();
        j["numEvenParts"] = even;
        std::cout << j.dump() << "\n";
        break;
      }
    }
  });
  return 0;
}

void emit_verdicts(const std::vector<audit::Verdict>& verdicts, Format format,
                   const std::string& outPath) {
  if (!outPath.empty()) {
    std::ofstream out(outPath);
    if (!out) throw Error("cannot open output file: " + outPath);
    out << audit::to_jsonl(verdicts);
  }
  switch (format) {
    case Format::Text:
      std::cout << audit::to_table(verdicts);
      break;
    case Format::Json:
      std::cout << audit::to_jsonl(verdicts);
      break;
    case Format::Csv: {
      std::cout << "id,params,order,status,firstDivergentExponent,lhsCoeff,"
                   "rhsCoeff\n";
      for (const auto& v : verdicts) {
        std::string params;
        for (const auto& [k, val] : v.params) {
          if (!params.empty()) params += ';';
          params += k + "=" + std::to_string(val);
        }
        std::cout << v.id << ',' << params << ',' << v.order << ','
                  << audit::status_string(v.status) << ',';
        if (v.has_divergence)
          std::cout << v.divergent_exponent << ',' << v.lhs.str() << ','
                    << v.rhs.str();
        else
          std::cout << ",,";
        std::cout << "\n";
      }
      break;
    }
  }
}

int verdict_exit_code(const std::vector<audit::Verdict>& verdicts) {
  return audit::all_hold(verdicts) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qtheta: exact q-series engine and identity audit"};
  app.require_subcommand(1);

  std::string format = "text";
  long long order = 500;
  bool seedless = false;
  app.add_option("--format", format, "output format: text, json or csv")
      ->capture_default_str();
  app.add_option("--order", order, "truncation order / oracle bound")
      ->capture_default_str();
  app.add_flag("--seedless", seedless,
               "reserved: the tool is deterministic and uses no RNG");

  auto* expand = app.add_subcommand("expand", "expand a registered product")->fallthrough();
  std::string productId;
  expand->add_option("product", productId, "registered product id")->required();

  auto* qfib = app.add_subcommand("qfib", "q-Fibonacci polynomials")->fallthrough();
  QfibOptions qopt;
  qfib->add_option("n", qopt.n, "index")->required();
  qfib->add_option("--route", qopt.route, "rec, closed, genfun or two-var")
      ->capture_default_str();
  qfib->add_option("--variant", qopt.variant,
                   "recurrence exponent variant: offset0, offset-1, offset-2")
      ->capture_default_str();
  qfib->add_option("--closed-kind", qopt.closedKind,
                   "closed-form exponent: triangular, square, doubled-triangular")
      ->capture_default_str();
  qfib->add_flag("--eval-q1", qopt.evalQ1, "print the exact value at q = 1");

  auto* partitions = app.add_subcommand("partitions", "enumerate partitions")->fallthrough();
  PartitionOptions popt;
  partitions->add_option("n", popt.n, "integer to partition")->required();
  partitions->add_option("--class", popt.cls, "all or distinct")
      ->capture_default_str();
  partitions->add_option("--stat", popt.stat,
                         "weighted count statistic: none, num-parts, "
                         "num-even-parts")
      ->capture_default_str();
  partitions->add_flag("--signed", popt.signedWeight,
                       "weight each partition by (-1)^{# even parts}");

  auto* verify = app.add_subcommand("verify", "verify one identity")->fallthrough();
  std::string identityId;
  std::string paramSpec;
  std::string outPath;
  verify->add_option("id", identityId, "registered identity id")->required();
  verify->add_option("--params", paramSpec, "comma-separated name=value list");
  verify->add_option("--out", outPath, "write the verdict as JSONL");

  auto* auditCmd = app.add_subcommand("audit", "run the full identity audit")->fallthrough();
  audit::AuditConfig config;
  std::string auditOut;
  auditCmd->add_option("--grid-n", config.poly_grid_max,
                       "index bound for polynomial families")
      ->capture_default_str();
  auditCmd->add_option("--weighted-n", config.weighted_grid_max,
                       "index bound for two-variable families")
      ->capture_default_str();
  auditCmd->add_option("--oracle-up-to", config.oracle_up_to,
                       "partition oracle bound")
      ->capture_default_str();
  auditCmd->add_option("--delta-k", config.delta_k_max,
                       "y-power bound in the combinatorial audit")
      ->capture_default_str();
  auditCmd->add_option("--jtp-j", config.jtp_j_max, "largest j in z = +-q^j")
      ->capture_default_str();
  auditCmd->add_option("--gauss-n", config.gauss_n_max,
                       "index bound for the q-binomial identity")
      ->capture_default_str();
  auditCmd->add_option("--jobs", config.jobs, "worker threads")
      ->capture_default_str();
  auditCmd->add_option("--out", auditOut, "write the JSONL report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (seedless) {
    std::cerr << "qtheta is deterministic by construction; --seedless is "
                 "reserved and rejected\n";
    return 2;
  }

  try {
    const Format fmt = parse_format(format);
    if (expand->parsed()) return run_expand(productId, order, fmt);
    if (qfib->parsed()) return run_qfib(qopt, fmt);
    if (partitions->parsed()) return run_partitions(popt, fmt);
    if (verify->parsed()) {
      const audit::Verdict v =
          audit::verify(identityId, parse_params(paramSpec), order);
      emit_verdicts({v}, fmt, outPath);
      return verdict_exit_code({v});
    }
    if (auditCmd->parsed()) {
      config.series_order = order;
      const auto verdicts = audit::audit_all(config);
      emit_verdicts(verdicts, fmt, auditOut);
      return verdict_exit_code(verdicts);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
