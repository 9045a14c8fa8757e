#include "annulus/annulus.h"

#include <cstring>
#include <new>

#include "annulus/constructions.hpp"
#include "annulus/error.hpp"
#include "annulus/io.hpp"
#include "annulus/report.hpp"

struct annulus_map {
  annulus::RationalMap map;
  std::vector<std::pair<annulus::Rational, annulus::Rational>> pairs;
};

namespace {

thread_local std::string last_error;

annulus_status status_of(annulus::ErrorKind k) {
  switch (k) {
    case annulus::ErrorKind::Parse: return ANNULUS_ERR_PARSE;
    case annulus::ErrorKind::InvalidArgument: return ANNULUS_ERR_INVALID_ARGUMENT;
    case annulus::ErrorKind::NotCertified: return ANNULUS_ERR_NOT_CERTIFIED;
    case annulus::ErrorKind::Precondition: return ANNULUS_ERR_PRECONDITION;
    case annulus::ErrorKind::Contradiction: return ANNULUS_ERR_CONTRADICTION;
  }
  return ANNULUS_ERR_INTERNAL;
}

template <class F>
annulus_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return ANNULUS_OK;
  } catch (const annulus::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("malformed JSON: ") + e.what();
    return ANNULUS_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return ANNULUS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return ANNULUS_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void require(const void* p, const char* what) {
  if (!p) annulus::fail(annulus::ErrorKind::InvalidArgument, std::string(what) + " is null");
}

annulus::Rational rat(const char* s, const char* what) {
  require(s, what);
  try {
    return annulus::parse_rational(s);
  } catch (const std::exception&) {
    annulus::fail(annulus::ErrorKind::InvalidArgument, std::string(what) + ": '" + s + "' is not a rational number");
  }
}

annulus::HyperplaneRankOptions kf(const annulus_kf_options* o) {
  annulus::HyperplaneRankOptions out;
  if (!o) return out;
  if (o->trials == 0) annulus::fail(annulus::ErrorKind::InvalidArgument, "trials must be positive");
  out.trials = o->trials;
  out.seed = o->seed;
  out.threads = o->threads == 0 ? 1 : o->threads;
  out.exact = o->exact != 0;
  return out;
}

std::string render(const annulus::json& report, int json) {
  return json ? report.dump(2) + "\n" : annulus::render_text(report);
}

annulus_map* wrap(annulus::RationalMap m) { return new annulus_map{std::move(m), {}}; }

}  // namespace

extern "C" {

void annulus_kf_options_default(annulus_kf_options* options) {
  if (!options) return;
  options->trials = 8;
  options->seed = 0;
  options->threads = 1;
  options->exact = 0;
}

const char* annulus_last_error(void) { return last_error.c_str(); }

void annulus_string_free(char* s) { std::free(s); }

annulus_status annulus_map_parse(const char* text, annulus_map** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    annulus::MapDocument doc = annulus::parse_map_document(text);
    *out = new annulus_map{std::move(doc.map), std::move(doc.sphere_pairs)};
  });
}

annulus_status annulus_map_from_json(const char* json_text, annulus_map** out) {
  return guarded([&] {
    require(json_text, "json_text");
    require(out, "out");
    annulus::json j = annulus::json::parse(json_text);
    *out = wrap(annulus::map_from_json(j.contains("map") ? j["map"] : j));
  });
}

void annulus_map_free(annulus_map* map) { delete map; }

unsigned annulus_map_source_dim(const annulus_map* map) {
  return map ? static_cast<unsigned>(map->map.source_dim()) : 0;
}

unsigned annulus_map_target_dim(const annulus_map* map) {
  return map ? static_cast<unsigned>(map->map.target_dim()) : 0;
}

annulus_status annulus_map_serialize(const annulus_map* map, char** out) {
  return guarded([&] {
    require(map, "map");
    require(out, "out");
    *out = dup(annulus::serialize_map(map->map, map->pairs));
  });
}

annulus_status annulus_map_to_json(const annulus_map* map, char** out) {
  return guarded([&] {
    require(map, "map");
    require(out, "out");
    *out = dup(annulus::to_json(map->map).dump(2) + "\n");
  });
}

int annulus_map_equal(const annulus_map* a, const annulus_map* b) {
  return a && b && a->map == b->map ? 1 : 0;
}

annulus_status annulus_map_homogeneous(unsigned n, unsigned d, annulus_map** out) {
  return guarded([&] {
    require(out, "out");
    *out = new annulus_map{annulus::homogeneous_map(n, d), {{1, 1}}};
  });
}

annulus_status annulus_map_juxtapose(const annulus_map* f, const annulus_map* g, const char* t, annulus_map** out) {
  return guarded([&] {
    require(f, "f");
    require(g, "g");
    require(out, "out");
    *out = wrap(annulus::juxtapose(f->map, g->map, rat(t, "t")));
  });
}

annulus_status annulus_map_affine_embedding(unsigned n, unsigned N, const char* s, const char* t, annulus_map** out) {
  return guarded([&] {
    require(out, "out");
    annulus::Rational rs = rat(s, "s"), rt = rat(t, "t");
    *out = new annulus_map{annulus::affine_embedding(n, N, rs, rt), {{1, 1}, {rs, rt}}};
  });
}

annulus_status annulus_map_pad(const annulus_map* f, unsigned N, const char* c, annulus_map** out) {
  return guarded([&] {
    require(f, "f");
    require(out, "out");
    *out = wrap(annulus::pad_and_shift(f->map, N, rat(c, "c")));
  });
}

annulus_status annulus_invariants(const annulus_map* map, const annulus_kf_options* options, int json, char** out) {
  return guarded([&] {
    require(map, "map");
    require(out, "out");
    *out = dup(render(annulus::invariants_json(map->map, kf(options)), json));
  });
}

annulus_status annulus_verify(const annulus_map* map, const char* s, const char* t, int json, char** out) {
  return guarded([&] {
    require(map, "map");
    require(out, "out");
    *out = dup(render(annulus::verify_json(map->map, rat(s, "s"), rat(t, "t")), json));
  });
}

annulus_status annulus_classify(const annulus_map* map, const char* s, const char* t,
                                const annulus_kf_options* options, int json, char** out) {
  return guarded([&] {
    require(map, "map");
    require(out, "out");
    *out = dup(render(annulus::classify_json(map->map, rat(s, "s"), rat(t, "t"), kf(options)), json));
  });
}

annulus_status annulus_classify_2_3(const annulus_map* map, const char* s, const char* t, int json, char** out) {
  return guarded([&] {
    require(map, "map");
    require(out, "out");
    *out = dup(render(annulus::classify_2_3_json(map->map, rat(s, "s"), rat(t, "t")), json));
  });
}

annulus_status annulus_orbit(const annulus_map* map, const char* s, const char* t, unsigned k,
                             const annulus_kf_options* options, int json, char** out) {
  return guarded([&] {
    require(map, "map");
    require(out, "out");
    *out = dup(render(annulus::orbit_json(map->map, rat(s, "s"), rat(t, "t"), k, kf(options)), json));
  });
}

annulus_status annulus_check_json(const char* json_text, char** out) {
  annulus_status st = ANNULUS_OK;
  annulus_status rc = guarded([&] {
    require(json_text, "json_text");
    require(out, "out");
    annulus::CheckResult r = annulus::check_report(annulus::json::parse(json_text));
    std::string summary = std::to_string(r.checked) + " witness(es) checked, " + std::to_string(r.failures.size()) +
                          " failure(s)\n";
    for (const auto& f : r.failures) summary += "  " + f + "\n";
    *out = dup(summary);
    if (!r.ok()) {
      st = ANNULUS_ERR_NOT_CERTIFIED;
      last_error = r.checked == 0 ? "report carries no witnesses" : "witness re-verification failed";
    }
  });
  return rc == ANNULUS_OK ? st : rc;
}

}  // extern "C"
