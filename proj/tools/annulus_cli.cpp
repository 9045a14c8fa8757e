// annulus: command-line front end over the C interface.
//
// exit status: 0 verdict reached, 2 certificate failure, 1 parse or usage error
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "annulus/annulus.h"

namespace {

struct MapDeleter {
  void operator()(annulus_map* m) const { annulus_map_free(m); }
};
using MapPtr = std::unique_ptr<annulus_map, MapDeleter>;

int exit_code(annulus_status st) {
  switch (st) {
    case ANNULUS_OK: return 0;
    case ANNULUS_ERR_NOT_CERTIFIED:
    case ANNULUS_ERR_PRECONDITION:
    case ANNULUS_ERR_CONTRADICTION: return 2;
    default: return 1;
  }
}

int report_failure(annulus_status st) {
  std::cerr << "annulus: " << annulus_last_error() << "\n";
  return exit_code(st);
}

bool read_text(const std::string& path, std::string& out) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      std::cerr << "annulus: cannot open " << path << "\n";
      return false;
    }
    buf << in.rdbuf();
  }
  out = buf.str();
  return true;
}

// 0 on success, otherwise the exit code to return
int load_map(const std::string& path, MapPtr& out) {
  std::string text;
  if (!read_text(path, text)) return 1;
  annulus_map* m = nullptr;
  annulus_status st = annulus_map_parse(text.c_str(), &m);
  if (st != ANNULUS_OK) {
    std::cerr << "annulus: " << path << ":" << annulus_last_error() << "\n";
    return exit_code(st);
  }
  out.reset(m);
  return 0;
}

int emit(annulus_status st, char*& text) {
  if (st != ANNULUS_OK) return report_failure(st);
  std::fputs(text, stdout);
  annulus_string_free(text);
  return 0;
}

int emit_map(annulus_status st, annulus_map*& m, bool json) {
  if (st != ANNULUS_OK) return report_failure(st);
  MapPtr owned(m);
  char* text = nullptr;
  annulus_status out = json ? annulus_map_to_json(m, &text) : annulus_map_serialize(m, &text);
  return emit(out, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proper holomorphic maps between spherical shells: invariants, certificates, classification"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false, exact = false;
  annulus_kf_options kf;
  annulus_kf_options_default(&kf);
  app.add_flag("--json", json, "machine-readable report with all witnesses");
  app.add_option("--seed", kf.seed, "seed for the randomized hyperplane rank");
  app.add_option("--trials", kf.trials, "random hyperplanes for k_f")->check(CLI::PositiveNumber);
  app.add_option("--threads", kf.threads, "worker threads for k_f trials")->check(CLI::PositiveNumber);
  app.add_flag("--exact-kf", exact, "symbolic generic hyperplane instead of random trials");

  std::string file, file2, s, t, c;
  unsigned k = 1, n = 0, d = 0, big_n = 0;
  bool two_three = false;

  auto* inv = app.add_subcommand("invariants", "degree, N_f, k_f and the invariant sphere spectrum");
  inv->add_option("map", file, "map document ('-' for stdin)")->required();

  auto* ver = app.add_subcommand("verify", "certify that the s-sphere maps into the t-sphere");
  ver->add_option("map", file)->required();
  ver->add_option("s", s, "source squared radius")->required();
  ver->add_option("t", t, "target squared radius")->required();

  auto* cls = app.add_subcommand("classify", "classify a proper map between shells with inner radii s, t");
  cls->add_option("map", file)->required();
  cls->add_option("s", s)->required();
  cls->add_option("t", t)->required();
  cls->add_flag("--two-three", two_three, "use the complete classification for n = 2, N = 3");

  auto* orb = app.add_subcommand("orbit", "iterate the induced automorphisms from a sphere pair");
  orb->add_option("map", file)->required();
  orb->add_option("s", s)->required();
  orb->add_option("t", t)->required();
  orb->add_option("k", k, "number of pairs")->required()->check(CLI::PositiveNumber);

  auto* con = app.add_subcommand("construct", "build a canonical map and print its document");
  con->require_subcommand(1);
  auto* hd = con->add_subcommand("hd", "homogeneous map H_d");
  hd->add_option("n", n)->required();
  hd->add_option("d", d)->required();
  auto* juxt = con->add_subcommand("juxt", "sqrt(1-t) f + sqrt(t) g");
  juxt->add_option("f", file)->required();
  juxt->add_option("g", file2)->required();
  juxt->add_option("t", t)->required();
  auto* emb = con->add_subcommand("embed", "affine embedding A(n, s) -> A(N, t)");
  emb->add_option("n", n)->required();
  emb->add_option("N", big_n)->required();
  emb->add_option("s", s)->required();
  emb->add_option("t", t)->required();
  auto* pad = con->add_subcommand("pad", "sqrt(1-c^2) f + c + zero padding to N components");
  pad->add_option("map", file)->required();
  pad->add_option("N", big_n)->required();
  pad->add_option("c", c)->required();

  auto* chk = app.add_subcommand("check", "re-verify the witnesses of a --json report");
  chk->add_option("report", file, "JSON report ('-' for stdin)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  kf.exact = exact ? 1 : 0;

  MapPtr map;
  char* text = nullptr;

  if (*chk) {
    std::string body;
    if (!read_text(file, body)) return 1;
    annulus_status st = annulus_check_json(body.c_str(), &text);
    if (text) {
      std::fputs(text, stdout);
      annulus_string_free(text);
    }
    return st == ANNULUS_OK ? 0 : report_failure(st);
  }

  if (*con) {
    annulus_map* out = nullptr;
    if (*hd) return emit_map(annulus_map_homogeneous(n, d, &out), out, json);
    if (*emb) return emit_map(annulus_map_affine_embedding(n, big_n, s.c_str(), t.c_str(), &out), out, json);
    if (int rc = load_map(file, map)) return rc;
    if (*pad) return emit_map(annulus_map_pad(map.get(), big_n, c.c_str(), &out), out, json);
    MapPtr g;
    if (int rc = load_map(file2, g)) return rc;
    return emit_map(annulus_map_juxtapose(map.get(), g.get(), t.c_str(), &out), out, json);
  }

  if (int rc = load_map(file, map)) return rc;
  int j = json ? 1 : 0;
  if (*inv) return emit(annulus_invariants(map.get(), &kf, j, &text), text);
  if (*ver) return emit(annulus_verify(map.get(), s.c_str(), t.c_str(), j, &text), text);
  if (*cls) {
    if (two_three) return emit(annulus_classify_2_3(map.get(), s.c_str(), t.c_str(), j, &text), text);
    return emit(annulus_classify(map.get(), s.c_str(), t.c_str(), &kf, j, &text), text);
  }
  return emit(annulus_orbit(map.get(), s.c_str(), t.c_str(), k, &kf, j, &text), text);
}
