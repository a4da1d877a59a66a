// Command-line front end. Talks to the library only through hagedorn.h.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hagedorn/hagedorn.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Failure {
  hg_status status;
  std::string message;
};

void check(hg_status s) {
  if (s != HG_OK) throw Failure{s, hg_last_error_message()};
}

struct StringDeleter {
  void operator()(char* s) const { hg_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct FrameDeleter {
  void operator()(hg_frame* f) const { hg_frame_free(f); }
};
using Frame = std::unique_ptr<hg_frame, FrameDeleter>;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{HG_IO, "Io: cannot open '" + path + "'"};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_frame_fixture(const std::string& s) { return s == "Z1" || s == "Z2" || s == "Z3"; }
bool is_matrix_fixture(const std::string& s) { return s == "M1" || s == "M2" || s == "M3"; }

// A fixture name or a path to a JSON frame.
Frame load_frame(const std::string& source, double tol) {
  hg_frame* f = nullptr;
  if (is_frame_fixture(source)) {
    check(hg_frame_from_fixture(source.c_str(), &f));
  } else {
    check(hg_frame_from_json(read_file(source).c_str(), tol, &f));
  }
  return Frame(f);
}

void print_failure(const Failure& f) {
  nlohmann::ordered_json j;
  j["error"] = {{"code", hg_status_name(f.status)}, {"message", f.message}};
  std::cout << j.dump(2) << '\n';
}

struct GridOptions {
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<int> points;

  hg_grid resolve(int dims, int default_points) {
    if (lower.empty()) lower.assign(static_cast<std::size_t>(dims), -2.0);
    if (upper.empty()) upper.assign(static_cast<std::size_t>(dims), 2.0);
    if (points.empty()) points.assign(static_cast<std::size_t>(dims), default_points);
    if (lower.size() == 1) lower.assign(static_cast<std::size_t>(dims), lower.front());
    if (upper.size() == 1) upper.assign(static_cast<std::size_t>(dims), upper.front());
    if (points.size() == 1) points.assign(static_cast<std::size_t>(dims), points.front());
    const auto n = static_cast<std::size_t>(dims);
    if (lower.size() != n || upper.size() != n || points.size() != n) {
      throw CLI::ValidationError("grid", "--lower, --upper and --points need 1 or " + std::to_string(dims) + " values");
    }
    return hg_grid{dims, lower.data(), upper.data(), points.data()};
  }
};

void add_grid_options(CLI::App* cmd, GridOptions& g, const std::string& axes) {
  cmd->add_option("--lower", g.lower, "Lower grid bound per axis (" + axes + "); default -2")->expected(1, -1);
  cmd->add_option("--upper", g.upper, "Upper grid bound per axis; default 2")->expected(1, -1);
  cmd->add_option("--points", g.points, "Nodes per axis")->expected(1, -1);
}

nlohmann::ordered_json complex_json(double re, double im) {
  return {{"re", re}, {"im", im}, {"abs", std::hypot(re, im)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalised Hagedorn wave packets and their Wigner transforms"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "hagedorn 1.0");

  // validate
  auto* validate = app.add_subcommand("validate", "Check isotropy, normalisation and G_Z of a frame");
  std::string v_fixture;
  std::string v_frame;
  int v_random = 0;
  std::uint64_t v_seed = 1;
  double v_tol = 1e-10;
  auto* v_opt_fixture = validate->add_option("--fixture", v_fixture, "Built-in frame Z1, Z2 or Z3");
  auto* v_opt_frame = validate->add_option("--frame", v_frame, "JSON file {\"Q\": ..., \"P\": ...}");
  auto* v_opt_random = validate->add_option("--random", v_random, "Generate a random frame of this dimension");
  validate->add_option("--seed", v_seed, "Seed for --random");
  validate->add_option("--tol", v_tol, "Residual tolerance");
  v_opt_fixture->excludes(v_opt_frame)->excludes(v_opt_random);
  v_opt_frame->excludes(v_opt_random);

  // poly
  auto* poly = app.add_subcommand("poly", "Export the polynomial table q_k^M for k <= kmax");
  std::string p_fixture;
  std::string p_matrix;
  std::vector<int> p_k;
  std::string p_out;
  bool p_check = false;
  auto* p_opt_fixture = poly->add_option("--fixture", p_fixture, "Built-in matrix M1, M2 or M3");
  auto* p_opt_matrix = poly->add_option("--matrix", p_matrix, "JSON file with a complex symmetric matrix");
  p_opt_fixture->excludes(p_opt_matrix);
  poly->add_option("--k", p_k, "Largest multi-index kmax")->required()->expected(1, -1);
  poly->add_option("--out", p_out, "Output JSON file (default stdout)");
  poly->add_flag("--check", p_check, "Run the oracle equivalences and print their report");

  // packet
  auto* packet = app.add_subcommand("packet", "Evaluate phi_k^eps[Z, Y] on a position grid (CSV)");
  std::string k_z;
  std::string k_y;
  std::vector<int> k_k;
  double k_eps = 0.1;
  std::vector<double> k_center;
  std::string k_out;
  GridOptions k_grid;
  packet->add_option("--Z", k_z, "Frame Z: fixture name or JSON file")->required();
  packet->add_option("--Y", k_y, "Frame Y (default Z)");
  packet->add_option("--k", k_k, "Multi-index k")->required()->expected(1, -1);
  packet->add_option("--eps", k_eps, "Semiclassical parameter")->check(CLI::PositiveNumber);
  packet->add_option("--center", k_center, "Phase-space center q1..qd p1..pd")->expected(1, -1);
  packet->add_option("--out", k_out, "Output CSV file (default stdout)");
  add_grid_options(packet, k_grid, "x1..xd");

  // wigner
  auto* wigner = app.add_subcommand("wigner", "Evaluate the Wigner function W_{k,l}^eps[Z, Y] on phase space");
  std::string w_z;
  std::string w_y;
  std::vector<int> w_k;
  std::vector<int> w_l;
  double w_eps = 0.1;
  std::vector<double> w_center;
  std::vector<double> w_at;
  std::string w_mode = "closed";
  bool w_integral = false;
  int w_nodes = 0;
  std::string w_out;
  GridOptions w_grid;
  wigner->add_option("--Z", w_z, "Frame Z: fixture name or JSON file")->required();
  wigner->add_option("--Y", w_y, "Frame Y (default Z)");
  wigner->add_option("--k", w_k, "Multi-index k")->required()->expected(1, -1);
  wigner->add_option("--l", w_l, "Multi-index l")->required()->expected(1, -1);
  wigner->add_option("--eps", w_eps, "Semiclassical parameter")->check(CLI::PositiveNumber);
  wigner->add_option("--center", w_center, "Common phase-space center of both packets")->expected(1, -1);
  wigner->add_option("--mode", w_mode, "closed, quadrature or factorized")
      ->check(CLI::IsMember({"closed", "quadrature", "factorized"}));
  auto* w_opt_at = wigner->add_option("--at", w_at, "Evaluate at one point q1..qd p1..pd (JSON output)")
                       ->expected(1, -1);
  auto* w_opt_integral = wigner->add_flag("--integral", w_integral, "Integrate over phase space (Y = Z, d <= 2)");
  wigner->add_option("--nodes", w_nodes, "Quadrature nodes per axis for --integral");
  wigner->add_option("--out", w_out, "Output CSV file (default stdout)");
  w_opt_at->excludes(w_opt_integral);
  add_grid_options(wigner, w_grid, "q1..qd p1..pd");

  // verify
  auto* verify = app.add_subcommand("verify", "Run the property suite and print a JSON report");
  std::string s_scope = "all";
  std::uint64_t s_seed = 20110917;
  verify->add_option("scope", s_scope, "frames, polys, packets, wigner or all")
      ->check(CLI::IsMember({"frames", "polys", "packets", "wigner", "all"}));
  verify->add_option("--seed", s_seed, "Seed for the random frames and matrices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (validate->parsed()) {
      if (v_fixture.empty() && v_frame.empty() && v_random == 0) {
        std::cerr << "validate: one of --fixture, --frame or --random is required\n";
        return kExitUsage;
      }
      std::string json;
      if (!v_frame.empty()) {
        json = read_file(v_frame);
      } else {
        hg_frame* f = nullptr;
        if (!v_fixture.empty()) {
          check(hg_frame_from_fixture(v_fixture.c_str(), &f));
        } else {
          check(hg_frame_random(v_random, v_seed, &f));
        }
        Frame frame(f);
        char* s = nullptr;
        check(hg_frame_to_json(frame.get(), &s));
        json = OwnedString(s).get();
      }
      char* report = nullptr;
      int pass = 0;
      check(hg_frame_report(json.c_str(), v_tol, &report, &pass));
      std::cout << OwnedString(report).get() << '\n';
      return pass ? kExitPass : kExitFail;
    }

    if (poly->parsed()) {
      std::string m_json;
      if (!p_fixture.empty()) {
        if (!is_matrix_fixture(p_fixture)) {
          std::cerr << "poly: unknown matrix fixture '" << p_fixture << "'\n";
          return kExitUsage;
        }
        char* s = nullptr;
        check(hg_matrix_fixture(p_fixture.c_str(), &s));
        m_json = OwnedString(s).get();
      } else if (!p_matrix.empty()) {
        m_json = read_file(p_matrix);
      } else {
        std::cerr << "poly: one of --fixture or --matrix is required\n";
        return kExitUsage;
      }
      const int dim = static_cast<int>(p_k.size());
      if (!p_check || !p_out.empty()) {
        char* table = nullptr;
        check(hg_poly_table(m_json.c_str(), p_k.data(), dim, &table));
        OwnedString owned(table);
        if (p_out.empty()) {
          std::cout << owned.get() << '\n';
        } else {
          std::ofstream out(p_out, std::ios::binary);
          if (!out) throw Failure{HG_IO, "Io: cannot open '" + p_out + "' for writing"};
          out << owned.get() << '\n';
        }
      }
      if (p_check) {
        char* report = nullptr;
        int pass = 0;
        check(hg_poly_check(m_json.c_str(), p_k.data(), dim, &report, &pass));
        std::cout << OwnedString(report).get() << '\n';
        return pass ? kExitPass : kExitFail;
      }
      return kExitPass;
    }

    if (packet->parsed()) {
      const Frame z = load_frame(k_z, 0.0);
      const Frame y = k_y.empty() ? Frame() : load_frame(k_y, 0.0);
      hg_packet* raw = nullptr;
      check(hg_packet_create(z.get(), y.get(), k_k.data(), static_cast<int>(k_k.size()), k_eps, &raw));
      std::unique_ptr<hg_packet, void (*)(hg_packet*)> p(raw, hg_packet_free);
      const int d = hg_frame_dim(z.get());
      if (!k_center.empty()) {
        if (static_cast<int>(k_center.size()) != 2 * d) {
          std::cerr << "packet: --center needs " << 2 * d << " values\n";
          return kExitUsage;
        }
        check(hg_packet_translate(p.get(), k_center.data()));
      }
      const hg_grid grid = k_grid.resolve(d, 201);
      check(hg_packet_grid_csv(p.get(), &grid, k_out.empty() ? nullptr : k_out.c_str()));
      return kExitPass;
    }

    if (wigner->parsed()) {
      const Frame z = load_frame(w_z, 0.0);
      const Frame y = w_y.empty() ? Frame() : load_frame(w_y, 0.0);
      if (w_k.size() != w_l.size()) {
        std::cerr << "wigner: --k and --l must have the same length\n";
        return kExitUsage;
      }
      hg_wigner* raw = nullptr;
      check(hg_wigner_create(z.get(), y.get(), w_k.data(), w_l.data(), static_cast<int>(w_k.size()), w_eps, &raw));
      std::unique_ptr<hg_wigner, void (*)(hg_wigner*)> w(raw, hg_wigner_free);
      const int d = hg_frame_dim(z.get());
      if (!w_center.empty()) {
        if (static_cast<int>(w_center.size()) != 2 * d) {
          std::cerr << "wigner: --center needs " << 2 * d << " values\n";
          return kExitUsage;
        }
        check(hg_wigner_translate(w.get(), w_center.data()));
      }
      const hg_wigner_mode mode = w_mode == "quadrature"   ? HG_WIGNER_QUADRATURE
                                  : w_mode == "factorized" ? HG_WIGNER_FACTORIZED
                                                           : HG_WIGNER_CLOSED;
      double re = 0.0;
      double im = 0.0;
      if (!w_at.empty()) {
        if (static_cast<int>(w_at.size()) != 2 * d) {
          std::cerr << "wigner: --at needs " << 2 * d << " values\n";
          return kExitUsage;
        }
        check(hg_wigner_eval(w.get(), mode, w_at.data(), &re, &im));
        std::cout << complex_json(re, im).dump(2) << '\n';
        return kExitPass;
      }
      if (w_integral) {
        check(hg_wigner_integral(w.get(), w_nodes, &re, &im));
        std::cout << complex_json(re, im).dump(2) << '\n';
        return kExitPass;
      }
      const hg_grid grid = w_grid.resolve(2 * d, d == 1 ? 201 : 21);
      check(hg_wigner_grid_csv(w.get(), mode, &grid, w_out.empty() ? nullptr : w_out.c_str()));
      return kExitPass;
    }

    if (verify->parsed()) {
      char* report = nullptr;
      int pass = 0;
      check(hg_verify(s_scope.c_str(), s_seed, &report, &pass));
      std::cout << OwnedString(report).get() << '\n';
      return pass ? kExitPass : kExitFail;
    }
  } catch (const Failure& f) {
    if (validate->parsed()) {
      print_failure(f);
    } else {
      std::cerr << "error: " << f.message << '\n';
    }
    return kExitFail;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
