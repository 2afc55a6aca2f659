// maxrange: command-line front end for max-algebra numerical ranges.
//
// One subcommand per computation; emits a single JSON document on stdout
// (or CSV with --format csv). Exit codes: 0 success, 1 failed verification,
// 2 input error, 3 enumeration limit refusal.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "maxalg/errors.hpp"
#include "maxalg/interval.hpp"
#include "maxalg/io.hpp"
#include "maxalg/isometry.hpp"
#include "maxalg/joint_range.hpp"
#include "maxalg/matrix.hpp"
#include "maxalg/oracle.hpp"
#include "maxalg/perm_range.hpp"
#include "maxalg/single_range.hpp"

namespace {

using maxalg::format_double;
using maxalg::input_error;
using maxalg::Interval;
using maxalg::IntervalSet;
using maxalg::MatrixTuple;
using maxalg::NonnegMatrix;
using maxalg::NonnegVector;
using maxalg::ParsedInput;
using maxalg::PointSet;

struct Options {
  std::string input;
  std::size_t k = 1;
  std::string c_flag;
  std::string c_file;
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  std::uint64_t limit = 10'000'000;
  int trials = 100;
  std::string format = "json";
  std::string out;
};

void emit_json(const nlohmann::json& doc) { std::cout << doc.dump() << "\n"; }

std::string csv_bool(bool b) { return b ? "true" : "false"; }

void emit_interval_set(const IntervalSet& s, const Options& opt) {
  if (opt.format == "json") {
    emit_json(maxalg::to_json(s));
    return;
  }
  std::cout << "lo,lo_closed,hi,hi_closed\n";
  for (const auto& iv : s.parts())
    std::cout << format_double(iv.lo) << ',' << csv_bool(iv.lo_closed) << ','
              << format_double(iv.hi) << ',' << csv_bool(iv.hi_closed) << "\n";
}

void emit_point_set(const PointSet& s, const Options& opt) {
  if (opt.format == "json") {
    emit_json(maxalg::to_json(s));
    return;
  }
  maxalg::write_point_set_csv(std::cout, s);
  std::cout << "# cardinality=" << s.cardinality() << "\n";
}

void emit_scalar(const std::optional<double>& v, const Options& opt) {
  if (opt.format == "json") {
    nlohmann::json doc{{"kind", "scalar"}};
    if (v)
      doc["value"] = *v;
    else
      doc["value"] = nullptr;
    emit_json(doc);
    return;
  }
  std::cout << "value\n";
  if (v) std::cout << format_double(*v) << "\n";
}

NonnegMatrix need_matrix(const ParsedInput& in, const std::string& path) {
  if (in.matrix) return *in.matrix;
  if (in.tuple && in.tuple->arity() == 1) return in.tuple->mats[0];
  throw input_error(path + ": this command needs a single matrix input");
}

MatrixTuple need_tuple(const ParsedInput& in, const std::string& path) {
  if (in.tuple) return *in.tuple;
  if (in.matrix) return MatrixTuple({*in.matrix});
  throw input_error(path + ": this command needs a matrix tuple input");
}

NonnegVector need_weights(const Options& opt, const ParsedInput& in) {
  if (!opt.c_flag.empty()) return maxalg::parse_weight_list(opt.c_flag);
  if (in.weights) return *in.weights;
  throw input_error("no weight vector: pass --c or add a \"c\" field to the input file");
}

NonnegMatrix need_weight_matrix(const Options& opt, const ParsedInput& in) {
  if (!opt.c_file.empty()) {
    ParsedInput cdoc = maxalg::parse_input_file(opt.c_file);
    if (cdoc.weight_matrix) return *cdoc.weight_matrix;
    if (cdoc.matrix) return *cdoc.matrix;
    throw input_error(opt.c_file + ": no weight matrix found");
  }
  if (in.weight_matrix) return *in.weight_matrix;
  throw input_error("no weight matrix: pass --C-file or add a \"C\" field to the input file");
}

int run_verify(const Options& opt) {
  std::vector<maxalg::OracleReport> reports =
      maxalg::run_claim_suite(opt.seed, opt.trials);
  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.passed();
  if (opt.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(maxalg::to_json(r));
    emit_json(nlohmann::json{{"kind", "report"}, {"all_pass", all_pass}, {"reports", arr}});
  } else {
    for (const auto& r : reports) std::cout << r.to_line() << "\n";
  }
  return all_pass ? 0 : 1;
}

int run_cloud(const Options& opt) {
  ParsedInput in = maxalg::parse_input_file(opt.input);
  MatrixTuple t = need_tuple(in, opt.input);
  maxalg::PointCloud cloud = maxalg::joint_sample_cloud(t, opt.k, opt.samples, opt.seed, opt.limit);
  if (opt.format == "csv") {
    maxalg::write_cloud_csv(std::cout, cloud);
    if (!opt.out.empty()) {
      std::ofstream f(opt.out, std::ios::binary);
      if (!f) throw input_error(opt.out + ": cannot open for writing");
      maxalg::write_cloud_csv(f, cloud);
    }
    return 0;
  }
  std::string path = opt.out.empty() ? "cloud.csv" : opt.out;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw input_error(path + ": cannot open for writing");
  maxalg::write_cloud_csv(f, cloud);
  emit_json(nlohmann::json{{"kind", "cloud_csv_path"},
                           {"path", path},
                           {"samples", cloud.points.size()},
                           {"seed", cloud.seed},
                           {"proven_empty", cloud.proven_empty}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"max-algebra numerical ranges of nonnegative matrices"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&opt](CLI::App* sub, bool with_input = true) {
    if (with_input)
      sub->add_option("input", opt.input, "matrix or tuple file (JSON or whitespace text)")
          ->required();
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    return sub;
  };

  CLI::App* wmax_cmd = add_common(app.add_subcommand("wmax", "numerical range of a matrix"));
  CLI::App* wmaxk_cmd =
      add_common(app.add_subcommand("wmax-k", "rank-k numerical range (trace form)"));
  wmaxk_cmd->add_option("--k", opt.k, "rank")->required();
  CLI::App* lambdak_cmd =
      add_common(app.add_subcommand("lambda-k", "rank-k interval numerical range"));
  lambdak_cmd->add_option("--k", opt.k, "rank")->required();
  lambdak_cmd->add_option("--limit", opt.limit, "family enumeration limit");
  CLI::App* radius_cmd =
      add_common(app.add_subcommand("radius", "numerical radius of the rank-k range"));
  radius_cmd->add_option("--k", opt.k, "rank")->required();
  radius_cmd->add_option("--limit", opt.limit, "family enumeration limit");
  CLI::App* eig_cmd =
      add_common(app.add_subcommand("eig", "geometric max eigenvalue (max cycle mean)"));
  CLI::App* hull_cmd =
      add_common(app.add_subcommand("hull", "max-convex hull of the weighted diagonal range"));
  hull_cmd->add_option("--c", opt.c_flag, "weight list, e.g. 2,8");
  CLI::App* crange_cmd =
      add_common(app.add_subcommand("c-range", "weighted diagonal range over permutations"));
  crange_cmd->add_option("--c", opt.c_flag, "weight list, e.g. 2,8");
  CLI::App* bigc_cmd =
      add_common(app.add_subcommand("C-range", "weight-matrix range over permutations"));
  bigc_cmd->add_option("--C-file", opt.c_file, "file holding the weight matrix");
  CLI::App* jbox_cmd =
      add_common(app.add_subcommand("joint-box", "bounding box of the joint rank-k range"));
  jbox_cmd->add_option("--k", opt.k, "rank")->required();
  CLI::App* jexact_cmd =
      add_common(app.add_subcommand("joint-exact", "the full-rank joint range point"));
  CLI::App* jcloud_cmd =
      add_common(app.add_subcommand("joint-cloud", "sampled point cloud of the joint range"));
  jcloud_cmd->add_option("--k", opt.k, "rank")->required();
  jcloud_cmd->add_option("--samples", opt.samples, "number of sampled points");
  jcloud_cmd->add_option("--seed", opt.seed, "sampling seed");
  jcloud_cmd->add_option("--limit", opt.limit, "family enumeration limit");
  jcloud_cmd->add_option("--out", opt.out, "CSV output path (default cloud.csv)");
  CLI::App* jc_cmd =
      add_common(app.add_subcommand("joint-c", "joint weighted range over permutations"));
  jc_cmd->add_option("--c", opt.c_flag, "weight list, e.g. 2,8");
  CLI::App* jC_cmd =
      add_common(app.add_subcommand("joint-C", "joint weight-matrix range over permutations"));
  jC_cmd->add_option("--C-file", opt.c_file, "file holding the weight matrix");
  CLI::App* verify_cmd = add_common(app.add_subcommand("verify", "run the claim suites"), false);
  verify_cmd->add_option("--seed", opt.seed, "suite seed");
  verify_cmd->add_option("--trials", opt.trials, "trials per claim")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(verify_cmd)) return run_verify(opt);
    if (app.got_subcommand(jcloud_cmd)) return run_cloud(opt);

    ParsedInput in = maxalg::parse_input_file(opt.input);
    if (app.got_subcommand(wmax_cmd)) {
      emit_interval_set(IntervalSet({maxalg::wmax(need_matrix(in, opt.input))}), opt);
    } else if (app.got_subcommand(wmaxk_cmd)) {
      emit_interval_set(IntervalSet({maxalg::wmax_k(need_matrix(in, opt.input), opt.k)}), opt);
    } else if (app.got_subcommand(lambdak_cmd)) {
      emit_interval_set(maxalg::lambda_k(need_matrix(in, opt.input), opt.k, opt.limit), opt);
    } else if (app.got_subcommand(radius_cmd)) {
      maxalg::RadiusValue r = maxalg::lambda_radius(need_matrix(in, opt.input), opt.k, opt.limit);
      emit_scalar(r.value, opt);
    } else if (app.got_subcommand(eig_cmd)) {
      emit_scalar(maxalg::max_eigenvalue(need_matrix(in, opt.input)), opt);
    } else if (app.got_subcommand(hull_cmd)) {
      Interval h = maxalg::c_range_hull(need_matrix(in, opt.input), need_weights(opt, in));
      emit_interval_set(IntervalSet({h}), opt);
    } else if (app.got_subcommand(crange_cmd)) {
      emit_point_set(maxalg::c_range(need_matrix(in, opt.input), need_weights(opt, in)), opt);
    } else if (app.got_subcommand(bigc_cmd)) {
      emit_point_set(maxalg::C_range(need_matrix(in, opt.input), need_weight_matrix(opt, in)),
                     opt);
    } else if (app.got_subcommand(jbox_cmd)) {
      maxalg::BoxRegion box = maxalg::joint_bounding_box(need_tuple(in, opt.input), opt.k);
      if (opt.format == "json") {
        emit_json(maxalg::to_json(box));
      } else {
        std::cout << "coord,lo,lo_closed,hi,hi_closed\n";
        for (std::size_t l = 0; l < box.coords.size(); ++l) {
          const Interval& iv = box.coords[l];
          std::cout << l + 1 << ',' << format_double(iv.lo) << ',' << csv_bool(iv.lo_closed)
                    << ',' << format_double(iv.hi) << ',' << csv_bool(iv.hi_closed) << "\n";
        }
      }
    } else if (app.got_subcommand(jexact_cmd)) {
      PointSet s;
      s.points.push_back(maxalg::joint_exact_full(need_tuple(in, opt.input)));
      emit_point_set(s, opt);
    } else if (app.got_subcommand(jc_cmd)) {
      emit_point_set(maxalg::joint_c_range(need_tuple(in, opt.input), need_weights(opt, in)),
                     opt);
    } else if (app.got_subcommand(jC_cmd)) {
      emit_point_set(
          maxalg::joint_C_range(need_tuple(in, opt.input), need_weight_matrix(opt, in)), opt);
    }
    return 0;
  } catch (const maxalg::limit_exceeded& e) {
    std::cerr << "error: " << e.what() << " (raise --limit to allow a larger search)\n";
    return 3;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
