// zetaratio command-line tool.
//
// Subcommands:
//   constants  Euler-product constants d1, d0_tilde, d0 with tail bounds
//   moment     second-moment quadrature vs. prediction over a T grid
//   mollified  mollified main-term decomposition S1 + S2 + S3
//   tails      pair-sum tail residuals and fitted decay slopes
//   approx     Dirichlet-polynomial approximation error at sampled heights
//   report     combined JSON pipeline (constants -> mollified -> moment -> scan)
//
// Output is CSV (default) or JSON; JSON serializes real numbers as decimal
// strings at 17 significant digits so files are byte-identical across
// platforms. Exit status: 0 success, 2 usage/domain error, 3 accuracy error.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zetaratio.h"

using ordered_json = nlohmann::ordered_json;

namespace {

struct options {
  double a = 2.0;
  double T = 1e4;
  std::uint64_t X = 1000;
  std::uint64_t prime_limit = 1000000;
  int digits = 30;
  int order = 16;
  double panel_c = 0.5;
  double rtol = 1e-6;
  std::string format = "csv";
  std::string out;
  std::uint64_t seed = 1;
  std::string kernel = "rs";
  std::string tgrid;
};

[[noreturn]] void die_usage(const std::string& msg) {
  std::fprintf(stderr, "%s\n", msg.c_str());
  std::exit(2);
}

int exit_code_for(zr_status st) {
  switch (st) {
    case ZR_USAGE:
    case ZR_DOMAIN:
    case ZR_RESOURCE:
      return 2;
    default:
      return 3; /* accuracy, pole, internal */
  }
}

void check(zr_status st) {
  if (st != ZR_OK) {
    std::fprintf(stderr, "%s\n", zr_last_error());
    std::exit(exit_code_for(st));
  }
}

std::string fmt17(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

struct session {
  zr_ctx* ctx = nullptr;
  zr_table* table = nullptr;
  session(int digits, std::uint64_t limit) {
    check(zr_ctx_create(digits, &ctx));
    check(zr_table_create(limit, &table));
  }
  ~session() {
    zr_table_destroy(table);
    zr_ctx_destroy(ctx);
  }
  session(const session&) = delete;
  session& operator=(const session&) = delete;
};

zr_quad_cfg make_quad_cfg(const options& o) {
  zr_quad_cfg cfg;
  zr_quad_cfg_default(&cfg);
  cfg.panel_c = o.panel_c;
  cfg.order = o.order;
  cfg.rtol = o.rtol;
  cfg.kernel.method =
      (o.kernel == "em") ? ZR_KERNEL_EULER_MACLAURIN : ZR_KERNEL_RIEMANN_SIEGEL;
  return cfg;
}

std::vector<double> parse_tgrid(const std::string& s) {
  std::vector<double> grid;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    const std::string tok = s.substr(pos, comma - pos);
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (tok.empty() || end == tok.c_str() || *end != '\0')
      die_usage("invalid value for --tgrid: \"" + tok + "\"");
    grid.push_back(v);
    pos = comma + 1;
  }
  return grid;
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) die_usage("cannot open --out file: " + out_path);
  f << payload;
  f.flush();
  if (!f.good()) die_usage("failed writing --out file: " + out_path);
}

ordered_json json_root(const char* command) {
  ordered_json j;
  j["schema_version"] = 1;
  j["command"] = command;
  return j;
}

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

/* ---- constants ---------------------------------------------------------- */

const char* kind_name(int kind) {
  switch (kind) {
    case ZR_KIND_D1:
      return "d1";
    case ZR_KIND_D0TILDE:
      return "d0_tilde";
    default:
      return "d0";
  }
}

std::vector<zr_euler_value> compute_constants(const session& s, double a, std::uint64_t P) {
  std::vector<zr_euler_value> rows(3);
  check(zr_d1(s.ctx, s.table, a, P, &rows[0]));
  check(zr_d0_tilde(s.ctx, s.table, a, P, &rows[1]));
  check(zr_d0(s.ctx, s.table, a, P, &rows[2]));
  return rows;
}

std::string constants_csv(const std::vector<zr_euler_value>& rows) {
  std::string out = "a,kind,value,prime_cutoff,tail_bound\n";
  for (const auto& r : rows) {
    out += fmt17(r.a);
    out += ',';
    out += kind_name(r.kind);
    out += ',';
    out += fmt17(r.value);
    out += ',';
    out += std::to_string(r.prime_cutoff);
    out += ',';
    out += fmt17(r.tail_bound);
    out += '\n';
  }
  return out;
}

ordered_json constants_rows_json(const std::vector<zr_euler_value>& rows) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json j;
    j["a"] = fmt17(r.a);
    j["kind"] = kind_name(r.kind);
    j["value"] = fmt17(r.value);
    j["prime_cutoff"] = r.prime_cutoff;
    j["tail_bound"] = fmt17(r.tail_bound);
    arr.push_back(std::move(j));
  }
  return arr;
}

/* ---- moment scan --------------------------------------------------------- */

std::vector<zr_scan_row> compute_scan(const session& s, const std::vector<double>& grid,
                                      const options& o) {
  const zr_quad_cfg cfg = make_quad_cfg(o);
  std::vector<zr_scan_row> rows(grid.size());
  check(zr_error_term_scan(s.ctx, s.table, grid.data(), grid.size(), o.a, &cfg,
                           o.prime_limit, rows.data()));
  return rows;
}

std::string scan_csv(const std::vector<zr_scan_row>& rows, double a) {
  std::string out = "T,a,lhs,prediction,rel_dev,nodes,err_est\n";
  for (const auto& r : rows) {
    out += fmt17(r.T);
    out += ',';
    out += fmt17(a);
    out += ',';
    out += fmt17(r.lhs);
    out += ',';
    out += fmt17(r.prediction);
    out += ',';
    out += fmt17(r.rel_dev);
    out += ',';
    out += std::to_string(r.nodes_used);
    out += ',';
    out += fmt17(r.err_est);
    out += '\n';
  }
  return out;
}

ordered_json scan_rows_json(const std::vector<zr_scan_row>& rows, double a) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json j;
    j["T"] = fmt17(r.T);
    j["a"] = fmt17(a);
    j["lhs"] = fmt17(r.lhs);
    j["prediction"] = fmt17(r.prediction);
    j["rel_dev"] = fmt17(r.rel_dev);
    j["nodes"] = r.nodes_used;
    j["err_est"] = fmt17(r.err_est);
    arr.push_back(std::move(j));
  }
  return arr;
}

/* ---- mollified main term -------------------------------------------------- */

std::string mollified_csv(const zr_mollified& m) {
  std::string out = "T,a,X,s1,s2,s3,total,gamma_used\n";
  out += fmt17(m.T);
  out += ',';
  out += fmt17(m.a);
  out += ',';
  out += std::to_string(m.X);
  out += ',';
  out += fmt17(m.s1);
  out += ',';
  out += fmt17(m.s2);
  out += ',';
  out += fmt17(m.s3);
  out += ',';
  out += fmt17(m.total);
  out += ',';
  out += fmt17(m.gamma_used);
  out += '\n';
  return out;
}

ordered_json mollified_json(const zr_mollified& m) {
  ordered_json j;
  j["T"] = fmt17(m.T);
  j["a"] = fmt17(m.a);
  j["X"] = m.X;
  j["s1"] = fmt17(m.s1);
  j["s2"] = fmt17(m.s2);
  j["s3"] = fmt17(m.s3);
  j["total"] = fmt17(m.total);
  j["gamma_used"] = fmt17(m.gamma_used);
  return j;
}

/* ---- pair-sum tails -------------------------------------------------------- */

struct tail_block {
  int variant;
  zr_tail_fit fit{};
  std::vector<std::uint64_t> grid;
  std::vector<double> residuals;
};

tail_block compute_tails(const session& s, double a, int variant) {
  tail_block b;
  b.variant = variant;
  for (int k = 4; k <= 12; ++k) b.grid.push_back(std::uint64_t(1) << k);
  b.residuals.resize(b.grid.size());
  check(zr_tail_fit_eval(s.ctx, s.table, a, variant, b.grid.data(), b.grid.size(),
                         std::uint64_t(1) << 16, b.residuals.data(), &b.fit));
  return b;
}

const char* variant_name(int variant) {
  return variant == ZR_PAIR_PLAIN ? "plain" : "log_ratio";
}

std::string tails_csv(const std::vector<tail_block>& blocks, double a) {
  std::string out = "variant,a,X,residual,fitted_slope\n";
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.grid.size(); ++i) {
      out += variant_name(b.variant);
      out += ',';
      out += fmt17(a);
      out += ',';
      out += std::to_string(b.grid[i]);
      out += ',';
      out += fmt17(b.residuals[i]);
      out += ',';
      out += fmt17(b.fit.slope);
      out += '\n';
    }
  }
  return out;
}

ordered_json tails_rows_json(const std::vector<tail_block>& blocks, double a) {
  ordered_json arr = ordered_json::array();
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.grid.size(); ++i) {
      ordered_json j;
      j["variant"] = variant_name(b.variant);
      j["a"] = fmt17(a);
      j["X"] = b.grid[i];
      j["residual"] = fmt17(b.residuals[i]);
      j["fitted_slope"] = fmt17(b.fit.slope);
      arr.push_back(std::move(j));
    }
  }
  return arr;
}

/* ---- Dirichlet polynomial approximation ------------------------------------ */

struct approx_row {
  double t;
  double ea;
};

std::vector<approx_row> compute_approx(const session& s, const options& o) {
  std::mt19937_64 gen(o.seed);
  std::vector<approx_row> rows;
  rows.reserve(100);
  for (int i = 0; i < 100; ++i) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    const double t = o.T + u * o.T;
    double ea = 0;
    check(zr_approx_error(s.ctx, s.table, t, o.a, o.X, &ea));
    rows.push_back({t, ea});
  }
  return rows;
}

std::string approx_csv(const std::vector<approx_row>& rows, const options& o) {
  std::string out = "t,a,X,E_a\n";
  for (const auto& r : rows) {
    out += fmt17(r.t);
    out += ',';
    out += fmt17(o.a);
    out += ',';
    out += std::to_string(o.X);
    out += ',';
    out += fmt17(r.ea);
    out += '\n';
  }
  return out;
}

ordered_json approx_rows_json(const std::vector<approx_row>& rows, const options& o) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json j;
    j["t"] = fmt17(r.t);
    j["a"] = fmt17(o.a);
    j["X"] = o.X;
    j["E_a"] = fmt17(r.ea);
    arr.push_back(std::move(j));
  }
  return arr;
}

/* ---- flag wiring ------------------------------------------------------------ */

void add_flags(CLI::App* sub, options& o) {
  sub->add_option("--a", o.a, "shift parameter a (a > 0)")->capture_default_str();
  sub->add_option("--T", o.T, "base height T")->capture_default_str();
  sub->add_option("--X", o.X, "Dirichlet-polynomial / mollifier length X")
      ->capture_default_str();
  sub->add_option("--prime-limit", o.prime_limit, "Euler-product prime cutoff P")
      ->capture_default_str();
  sub->add_option("--digits", o.digits, "working precision, decimal digits (15..32)")
      ->capture_default_str();
  sub->add_option("--order", o.order, "Gauss-Legendre order (4..64)")->capture_default_str();
  sub->add_option("--panel-c", o.panel_c, "panel width factor c (0 < c <= 2)")
      ->capture_default_str();
  sub->add_option("--rtol", o.rtol, "quadrature relative tolerance")->capture_default_str();
  sub->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--out", o.out, "output file (default: stdout)");
  sub->add_option("--seed", o.seed, "rng seed for sampled-t studies")->capture_default_str();
  sub->add_option("--kernel", o.kernel, "critical-line zeta kernel")
      ->check(CLI::IsMember({"em", "rs"}))
      ->capture_default_str();
  sub->add_option("--tgrid", o.tgrid, "comma-separated ascending T grid for scans");
}

int run(int argc, char** argv) {
  CLI::App app{"zetaratio: mean values of ratios of the Riemann zeta function"};
  app.require_subcommand(1);
  options o;
  CLI::App* cmd_constants =
      app.add_subcommand("constants", "Euler-product constants d1, d0_tilde, d0");
  CLI::App* cmd_moment =
      app.add_subcommand("moment", "second-moment quadrature vs. prediction");
  CLI::App* cmd_mollified =
      app.add_subcommand("mollified", "mollified main-term decomposition");
  CLI::App* cmd_tails = app.add_subcommand("tails", "pair-sum tail residuals and slopes");
  CLI::App* cmd_approx =
      app.add_subcommand("approx", "1/zeta Dirichlet-polynomial approximation error");
  CLI::App* cmd_report = app.add_subcommand("report", "combined JSON pipeline report");
  for (CLI::App* sub :
       {cmd_constants, cmd_moment, cmd_mollified, cmd_tails, cmd_approx, cmd_report})
    add_flags(sub, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  }

  const bool json = (o.format == "json");

  if (app.got_subcommand(cmd_constants)) {
    session s(o.digits, o.prime_limit);
    const auto rows = compute_constants(s, o.a, o.prime_limit);
    if (json) {
      ordered_json j = json_root("constants");
      j["rows"] = constants_rows_json(rows);
      emit(dump_json(j), o.out);
    } else {
      emit(constants_csv(rows), o.out);
    }
  } else if (app.got_subcommand(cmd_moment)) {
    session s(o.digits, o.prime_limit);
    const std::vector<double> grid =
        o.tgrid.empty() ? std::vector<double>{o.T} : parse_tgrid(o.tgrid);
    const auto rows = compute_scan(s, grid, o);
    if (json) {
      ordered_json j = json_root("moment");
      j["rows"] = scan_rows_json(rows, o.a);
      emit(dump_json(j), o.out);
    } else {
      emit(scan_csv(rows, o.a), o.out);
    }
  } else if (app.got_subcommand(cmd_mollified)) {
    if (o.X > o.prime_limit) die_usage("--X must not exceed --prime-limit");
    session s(o.digits, std::max(o.X, std::uint64_t(100)));
    zr_mollified m{};
    check(zr_bchb_main_term(s.ctx, s.table, o.T, o.a, o.X, &m));
    if (json) {
      ordered_json j = json_root("mollified");
      j["row"] = mollified_json(m);
      emit(dump_json(j), o.out);
    } else {
      emit(mollified_csv(m), o.out);
    }
  } else if (app.got_subcommand(cmd_tails)) {
    session s(o.digits, std::uint64_t(1) << 16);
    std::vector<tail_block> blocks;
    blocks.push_back(compute_tails(s, o.a, ZR_PAIR_PLAIN));
    blocks.push_back(compute_tails(s, o.a, ZR_PAIR_LOG_RATIO));
    if (json) {
      ordered_json j = json_root("tails");
      j["rows"] = tails_rows_json(blocks, o.a);
      emit(dump_json(j), o.out);
    } else {
      emit(tails_csv(blocks, o.a), o.out);
    }
  } else if (app.got_subcommand(cmd_approx)) {
    if (o.X > o.prime_limit) die_usage("--X must not exceed --prime-limit");
    session s(o.digits, std::max(o.X, std::uint64_t(100)));
    const auto rows = compute_approx(s, o);
    if (json) {
      ordered_json j = json_root("approx");
      j["rows"] = approx_rows_json(rows, o);
      emit(dump_json(j), o.out);
    } else {
      emit(approx_csv(rows, o), o.out);
    }
  } else if (app.got_subcommand(cmd_report)) {
    if (o.X > o.prime_limit) die_usage("--X must not exceed --prime-limit");
    session s(o.digits, std::max(o.prime_limit, o.X));
    ordered_json j = json_root("report");
    j["constants"] = constants_rows_json(compute_constants(s, o.a, o.prime_limit));
    zr_mollified m{};
    check(zr_bchb_main_term(s.ctx, s.table, o.T, o.a, o.X, &m));
    j["mollified"] = mollified_json(m);
    const zr_quad_cfg cfg = make_quad_cfg(o);
    zr_moment mom{};
    check(zr_integrate_ratio_moment(s.ctx, o.T, o.a, &cfg, &mom));
    ordered_json jm;
    jm["t_lo"] = fmt17(mom.t_lo);
    jm["t_hi"] = fmt17(mom.t_hi);
    jm["a"] = fmt17(mom.a);
    jm["value"] = fmt17(mom.value);
    jm["nodes"] = mom.nodes_used;
    jm["err_est"] = fmt17(mom.err_est);
    j["moment"] = jm;
    const std::vector<double> grid =
        o.tgrid.empty() ? std::vector<double>{o.T} : parse_tgrid(o.tgrid);
    j["scan"] = scan_rows_json(compute_scan(s, grid, o), o.a);
    emit(dump_json(j), o.out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
