/* Copyright 2026 The sxlab Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "sxlab/sxlab.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <string>

#include "sxlab/godel.hpp"
#include "sxlab/render.hpp"
#include "sxlab/surprise.hpp"

struct sxlab_formula {
  sxlab::Formula value;
};

struct sxlab_schedule {
  sxlab::HazardSchedule value;
};

namespace {

thread_local std::string g_error;

sxlab_status fail(sxlab_status s, const std::string& msg) {
  g_error = msg;
  return s;
}

template <typename F>
sxlab_status guarded(F&& body) {
  g_error.clear();
  try {
    return body();
  } catch (const sxlab::UsageError& e) {
    return fail(SXLAB_E_USAGE, e.what());
  } catch (const sxlab::SyntaxError& e) {
    return fail(SXLAB_E_PARSE, "at offset " + std::to_string(e.offset()) + ": " + e.what());
  } catch (const sxlab::FormatError& e) {
    return fail(SXLAB_E_PARSE, e.what());
  } catch (const sxlab::DomainError& e) {
    return fail(SXLAB_E_DOMAIN, e.what());
  } catch (const sxlab::IoError& e) {
    return fail(SXLAB_E_IO, e.what());
  } catch (const std::exception& e) {
    return fail(SXLAB_E_INTERNAL, e.what());
  } catch (...) {
    return fail(SXLAB_E_INTERNAL, "unknown error");
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sxlab_status emit(const std::string& s, char** out) {
  if (!out) return fail(SXLAB_E_USAGE, "null output pointer");
  *out = dup(s);
  return SXLAB_OK;
}

sxlab::RenderOptions options(const sxlab_render_options* o) {
  sxlab::RenderOptions r;
  if (!o) return r;
  switch (o->format) {
    case SXLAB_FORMAT_TEXT: r.format = sxlab::Format::Text; break;
    case SXLAB_FORMAT_JSON: r.format = sxlab::Format::Json; break;
    case SXLAB_FORMAT_CSV: r.format = sxlab::Format::Csv; break;
    default: throw sxlab::UsageError("unknown output format");
  }
  r.full_codes = o->full_codes != 0;
  return r;
}

sxlab::Natural natural(const char* s) {
  if (!s || !*s) throw sxlab::DomainError("empty number");
  for (const char* c = s; *c; ++c)
    if (*c < '0' || *c > '9') throw sxlab::DomainError(std::string("not a natural: ") + s);
  return sxlab::Natural(s, 10);
}

sxlab::EpistemicSystem system_for(uint32_t m, const char* agents) {
  if (!agents || !*agents) return sxlab::EpistemicSystem::days(m);
  const std::string a(agents);
  if (a == "students") return sxlab::EpistemicSystem::students(m);
  std::vector<std::string> ids;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = a.find(',', start);
    ids.push_back(a.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return sxlab::EpistemicSystem::with_agents(m, ids);
}

}  // namespace

extern "C" {

const char* sxlab_version(void) { return "1.0.0"; }

const char* sxlab_last_error(void) { return g_error.c_str(); }

void sxlab_string_free(char* s) { std::free(s); }

sxlab_status sxlab_format_parse(const char* name, sxlab_format* out) {
  return guarded([&] {
    if (!name || !out) return fail(SXLAB_E_USAGE, "null argument");
    switch (sxlab::format_from_name(name)) {
      case sxlab::Format::Text: *out = SXLAB_FORMAT_TEXT; break;
      case sxlab::Format::Json: *out = SXLAB_FORMAT_JSON; break;
      case sxlab::Format::Csv: *out = SXLAB_FORMAT_CSV; break;
    }
    return SXLAB_OK;
  });
}

sxlab_status sxlab_formula_parse(const char* text, sxlab_formula** out) {
  return guarded([&] {
    if (!text || !out) return fail(SXLAB_E_USAGE, "null argument");
    *out = new sxlab_formula{sxlab::parse(text)};
    return SXLAB_OK;
  });
}

void sxlab_formula_free(sxlab_formula* f) { delete f; }

sxlab_status sxlab_formula_print(const sxlab_formula* f, char** out) {
  return guarded([&] {
    if (!f) return fail(SXLAB_E_USAGE, "null formula");
    return emit(sxlab::print(f->value), out);
  });
}

int sxlab_formula_equal(const sxlab_formula* a, const sxlab_formula* b) {
  return a && b && a->value == b->value ? 1 : 0;
}

sxlab_status sxlab_formula_encode(const sxlab_formula* f, char** out) {
  return guarded([&] {
    if (!f) return fail(SXLAB_E_USAGE, "null formula");
    return emit(sxlab::encode(f->value).decimal(), out);
  });
}

sxlab_status sxlab_formula_decode(const char* code, sxlab_formula** out) {
  return guarded([&] {
    if (!out) return fail(SXLAB_E_USAGE, "null argument");
    *out = new sxlab_formula{sxlab::decode(sxlab::Code(natural(code)))};
    return SXLAB_OK;
  });
}

sxlab_status sxlab_diag(const char* m, const char* n, char** out) {
  return guarded([&] {
    return emit(sxlab::diag(sxlab::Code(natural(m)), natural(n)).decimal(), out);
  });
}

sxlab_status sxlab_schedule_narveson(uint32_t m, sxlab_schedule** out) {
  return guarded([&] {
    if (!out) return fail(SXLAB_E_USAGE, "null argument");
    *out = new sxlab_schedule{sxlab::narveson(m)};
    return SXLAB_OK;
  });
}

sxlab_status sxlab_schedule_from_distribution(const double* p, size_t m,
                                              sxlab_schedule** out) {
  return guarded([&] {
    if (!out || (!p && m)) return fail(SXLAB_E_USAGE, "null argument");
    *out = new sxlab_schedule{sxlab::from_distribution(std::vector<double>(p, p + m))};
    return SXLAB_OK;
  });
}

void sxlab_schedule_free(sxlab_schedule* s) { delete s; }

uint32_t sxlab_schedule_days(const sxlab_schedule* s) { return s ? s->value.m : 0; }

double sxlab_schedule_p(const sxlab_schedule* s, uint32_t k) {
  if (!s || k < 1 || k > s->value.m) return std::numeric_limits<double>::quiet_NaN();
  return s->value.p[k - 1];
}

double sxlab_schedule_hazard(const sxlab_schedule* s, uint32_t k) {
  if (!s || k < 1 || k > s->value.m) return std::numeric_limits<double>::quiet_NaN();
  return s->value.hazard(k);
}

sxlab_status sxlab_schedule_expected_surprise(const sxlab_schedule* s, double* out) {
  return guarded([&] {
    if (!s || !out) return fail(SXLAB_E_USAGE, "null argument");
    *out = sxlab::expected_surprise(s->value);
    return SXLAB_OK;
  });
}

sxlab_status sxlab_render_fitch(uint32_t m, int exclusive_or,
                                const sxlab_render_options* opts, char** out) {
  return guarded([&] {
    const auto c = exclusive_or ? sxlab::Connective::Xor : sxlab::Connective::InclusiveOr;
    return emit(sxlab::render_fitch(m, c, options(opts)), out);
  });
}

sxlab_status sxlab_render_epistemic(uint32_t m, const char* agents, int lemma_only,
                                    const sxlab_render_options* opts, char** out) {
  return guarded([&] {
    return emit(sxlab::render_epistemic(system_for(m, agents), lemma_only != 0,
                                        options(opts)),
                out);
  });
}

sxlab_status sxlab_render_knower(const sxlab_render_options* opts, char** out) {
  return guarded([&] { return emit(sxlab::render_knower(options(opts)), out); });
}

sxlab_status sxlab_render_ipd(uint32_t n, const char* payoffs,
                              const sxlab_render_options* opts, char** out) {
  return guarded([&] {
    const sxlab::PayoffMatrix pm =
        payoffs ? sxlab::PayoffMatrix::parse(payoffs) : sxlab::PayoffMatrix{};
    return emit(sxlab::render_ipd(n, pm, options(opts)), out);
  });
}

sxlab_status sxlab_render_surprise(uint32_t m, int oracle,
                                   const sxlab_render_options* opts, char** out) {
  return guarded(
      [&] { return emit(sxlab::render_surprise(m, oracle != 0, options(opts)), out); });
}

sxlab_status sxlab_check(const char* document, const char* rules, uint32_t days,
                         const char* agents, char** report) {
  return guarded([&] {
    if (!document || !report) return fail(SXLAB_E_USAGE, "null argument");
    sxlab::CheckRequest req;
    if (rules && *rules) req.rules = rules;
    if (days > 0) req.system = system_for(days, agents);
    const sxlab::CheckOutcome o = sxlab::check_document(document, req);
    *report = dup(o.report);
    if (!o.accepted) return fail(SXLAB_E_CHECK, o.report);
    return SXLAB_OK;
  });
}

sxlab_status sxlab_write_goldens(const char* dir) {
  return guarded([&] {
    if (!dir || !*dir) return fail(SXLAB_E_USAGE, "no directory given");
    sxlab::write_goldens(dir);
    return SXLAB_OK;
  });
}

}  // extern "C"
