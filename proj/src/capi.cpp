#include <map>
#include <memory>
#include <string>

#include "nichols_dm/errors.hpp"
#include "nichols_dm/nichols_dm.h"
#include "serialize.hpp"

struct ndm_context {
  int threads = 1;
  std::string last_error;
};

struct ndm_result {
  std::string text;
};

struct ndm_lifting {
  ndm_context* ctx = nullptr;
  int m = 0;
  char family = 'c';
  ndm::FamilyI I;
  ndm::FamilyL L;
  std::map<ndm::ParamKind, ndm::CycloNumber> all;
  std::map<ndm::ParamSlot, ndm::CycloNumber> explicit_values;
};

namespace {

using ndm::io::json;

const char* kind_of(ndm_status s) {
  switch (s) {
    case NDM_ERR_DOMAIN: return "domain";
    case NDM_ERR_CHECK: return "check";
    case NDM_ERR_ARG: return "argument";
    default: return "internal";
  }
}

ndm_status fail(ndm_context* ctx, ndm_status s, const std::string& message) {
  if (ctx) {
    json e = {{"schema", ndm::io::kSchema}, {"error", {{"kind", kind_of(s)}, {"message", message}}}};
    ctx->last_error = e.dump();
  }
  return s;
}

template <typename F>
ndm_status guarded(ndm_context* ctx, F&& body) {
  if (!ctx) return NDM_ERR_ARG;
  ctx->last_error.clear();
  try {
    return body();
  } catch (const ndm::DomainError& e) {
    return fail(ctx, NDM_ERR_DOMAIN, e.what());
  } catch (const ndm::CheckFailure& e) {
    return fail(ctx, NDM_ERR_CHECK, e.what());
  } catch (const std::exception& e) {
    return fail(ctx, NDM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ctx, NDM_ERR_INTERNAL, "unknown exception");
  }
}

ndm_status emit(const json& j, ndm_result** out) {
  *out = new ndm_result{ndm::io::dump(j)};
  return NDM_OK;
}

std::string str_or_empty(const char* s) { return s ? std::string(s) : std::string(); }

ndm::LiftingDatum assemble(const ndm_lifting& l) {
  ndm::LiftingDatum d;
  const auto shape = ndm::parameter_shape(l.m, l.I, l.L);
  for (const auto& s : shape.free) {
    auto it = l.all.find(s.kind);
    if (it != l.all.end() && !it->second.is_zero()) d.values.insert_or_assign(s, it->second);
  }
  for (const auto& [s, v] : l.explicit_values) {
    if (v.is_zero())
      d.values.erase(s);
    else
      d.values.insert_or_assign(s, v);
  }
  return ndm::normalize_datum(l.m, l.I, l.L, d);
}

ndm::Presentation build(const ndm_lifting& l) {
  const ndm::LiftingDatum d = assemble(l);
  switch (l.family) {
    case 'a':
    case 'b':
      if (!d.values.empty()) throw ndm::DomainError(std::string("family ") + l.family + " takes no parameters");
      return l.family == 'a' ? ndm::bosonization(l.m, ndm::build_M_I(l.m, l.I))
                             : ndm::bosonization(l.m, ndm::build_M_L(l.m, l.L));
    case 'c':
      return ndm::presentation_A(l.m, l.I, d);
    default:
      return ndm::presentation_B(l.m, l.I, l.L, d);
  }
}

}  // namespace

extern "C" {

const char* ndm_version(void) { return "0.1.0"; }

const char* ndm_status_name(ndm_status s) {
  switch (s) {
    case NDM_OK: return "ok";
    case NDM_ERR_DOMAIN: return "domain";
    case NDM_ERR_CHECK: return "check";
    case NDM_ERR_INTERNAL: return "internal";
    case NDM_ERR_ARG: return "argument";
  }
  return "unknown";
}

ndm_status ndm_context_create(ndm_context** out) {
  if (!out) return NDM_ERR_ARG;
  *out = new ndm_context();
  return NDM_OK;
}

void ndm_context_destroy(ndm_context* ctx) { delete ctx; }

ndm_status ndm_context_set_threads(ndm_context* ctx, int threads) {
  if (!ctx) return NDM_ERR_ARG;
  ctx->threads = threads > 0 ? threads : 1;
  return NDM_OK;
}

const char* ndm_context_last_error(const ndm_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

const char* ndm_result_json(const ndm_result* r) { return r ? r->text.c_str() : ""; }

void ndm_result_destroy(ndm_result* r) { delete r; }

ndm_status ndm_classify_report(ndm_context* ctx, int m, int max_size, int set_only, ndm_result** out) {
  return guarded(ctx, [&] {
    if (!out) return fail(ctx, NDM_ERR_ARG, "null output pointer");
    return emit(ndm::io::classification_json(ndm::classification_report(m, max_size, set_only != 0, ctx->threads)), out);
  });
}

ndm_status ndm_nichols(ndm_context* ctx, int m, const char* module, ndm_result** out) {
  return guarded(ctx, [&] {
    if (!out || !module) return fail(ctx, NDM_ERR_ARG, "null argument");
    ndm::require_classification_order(m);
    const auto M = ndm::io::parse_module(m, module);
    const auto r = ndm::nichols_dimension(M.module, ctx->threads);
    return emit(ndm::io::nichols_json(m, module, M, r), out);
  });
}

ndm_status ndm_rack_report(ndm_context* ctx, int m, const char* class_label, ndm_result** out) {
  return guarded(ctx, [&] {
    if (!out || !class_label) return fail(ctx, NDM_ERR_ARG, "null argument");
    return emit(ndm::io::rack_json(m, class_label, ctx->threads), out);
  });
}

ndm_status ndm_reps_report(ndm_context* ctx, int m, ndm_result** out) {
  return guarded(ctx, [&] {
    if (!out) return fail(ctx, NDM_ERR_ARG, "null output pointer");
    return emit(ndm::io::reps_json(m), out);
  });
}

ndm_status ndm_iso_report(ndm_context* ctx, int m, int max_size, const char* grid, int rescale, ndm_result** out) {
  return guarded(ctx, [&] {
    if (!out) return fail(ctx, NDM_ERR_ARG, "null output pointer");
    ndm::require_classification_order(m);
    if (max_size < 1) throw ndm::DomainError("max_size must be at least 1");
    auto g = ndm::io::parse_grid(str_or_empty(grid), m);
    if (g.empty()) g = {ndm::CycloNumber(m, 0), ndm::CycloNumber(m, 1)};
    const auto classes = ndm::iso_classes(m, max_size, g, rescale != 0);
    return emit(ndm::io::iso_json(m, max_size, g, rescale != 0, classes), out);
  });
}

ndm_status ndm_lifting_create(ndm_context* ctx, int m, char family, const char* I, const char* L,
                              ndm_lifting** out) {
  return guarded(ctx, [&] {
    if (!out) return fail(ctx, NDM_ERR_ARG, "null output pointer");
    ndm::require_classification_order(m);
    auto h = std::make_unique<ndm_lifting>();
    h->ctx = ctx;
    h->m = m;
    h->family = family;
    const auto pairs = ndm::io::parse_pairs(str_or_empty(I));
    const auto ells = ndm::io::parse_ells(str_or_empty(L));
    const bool want_I = family != 'b', want_L = family == 'b' || family == 'd';
    if (family < 'a' || family > 'd') throw ndm::DomainError(std::string("unknown family '") + family + "'");
    if (want_I == pairs.empty()) throw ndm::DomainError(std::string("family ") + family + (want_I ? " needs" : " takes no") + " I");
    if (want_L == ells.empty()) throw ndm::DomainError(std::string("family ") + family + (want_L ? " needs" : " takes no") + " L");
    if (want_I) h->I = ndm::make_family_I(m, pairs);
    if (want_L) h->L = ndm::make_family_L(m, ells);
    if (family == 'a' && (h->I.pairs.size() != 1 || h->I.pairs[0].k == m / 2))
      throw ndm::DomainError("family a is a single pair (i,k) with k != n");
    if (family == 'd') ndm::make_family_K(m, h->I, h->L);
    build(*h);  // validates the family
    *out = h.release();
    return NDM_OK;
  });
}

void ndm_lifting_destroy(ndm_lifting* l) { delete l; }

ndm_status ndm_lifting_set_all(ndm_lifting* l, const char* kind, const char* value) {
  if (!l) return NDM_ERR_ARG;
  return guarded(l->ctx, [&] {
    if (!kind || !value) return fail(l->ctx, NDM_ERR_ARG, "null argument");
    l->all.insert_or_assign(ndm::parse_param_kind(kind), ndm::parse_cyclo(value, l->m));
    return NDM_OK;
  });
}

ndm_status ndm_lifting_set(ndm_lifting* l, const char* slot, const char* value) {
  if (!l) return NDM_ERR_ARG;
  return guarded(l->ctx, [&] {
    if (!slot || !value) return fail(l->ctx, NDM_ERR_ARG, "null argument");
    ndm::ParamSlot s = ndm::io::parse_slot(slot);
    if ((s.kind == ndm::ParamKind::Lambda || s.kind == ndm::ParamKind::Gamma) && s.a > s.b) std::swap(s.a, s.b);
    l->explicit_values.insert_or_assign(s, ndm::parse_cyclo(value, l->m));
    try {
      assemble(*l);
    } catch (...) {
      l->explicit_values.erase(s);
      throw;
    }
    return NDM_OK;
  });
}

ndm_status ndm_lifting_presentation(ndm_lifting* l, ndm_result** out) {
  if (!l) return NDM_ERR_ARG;
  return guarded(l->ctx, [&] {
    if (!out) return fail(l->ctx, NDM_ERR_ARG, "null output pointer");
    return emit(ndm::io::presentation_json(build(*l), l->family), out);
  });
}

ndm_status ndm_lifting_verify(ndm_lifting* l, ndm_result** out) {
  if (!l) return NDM_ERR_ARG;
  return guarded(l->ctx, [&] {
    if (!out) return fail(l->ctx, NDM_ERR_ARG, "null output pointer");
    const auto P = build(*l);
    ndm::CompletionOptions opts;
    opts.threads = l->ctx->threads;
    const auto R = ndm::compile(P, opts);
    const auto d = ndm::dimension(R);
    std::size_t expected = 2 * static_cast<std::size_t>(l->m);
    for (std::size_t i = 0; i < P.I.pairs.size() + P.L.ells.size(); ++i) expected *= 4;
    const auto h = ndm::hopf_check(P, R);
    const auto sp = ndm::skew_primitives(R, ndm::DihedralGroup(l->m).identity());
    const json j = ndm::io::verify_json(P, l->family, R, d, expected, h, sp);
    emit(j, out);
    if (!j["ok"].get<bool>()) return fail(l->ctx, NDM_ERR_CHECK, "verification failed");
    return NDM_OK;
  });
}

}  // extern "C"
