#include "orbsplice/orbsplice.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "orbsplice/homology.hpp"
#include "orbsplice/report.hpp"

struct osq_graph {
  orbsplice::DecoratedGraph value;
};

struct osq_group {
  orbsplice::AbelianGroup value;
};

namespace {

using orbsplice::ErrorCode;

static_assert(static_cast<int>(ErrorCode::ParseError) + 1 == OSQ_ERR_PARSE);
static_assert(static_cast<int>(ErrorCode::Internal) + 1 == OSQ_ERR_INTERNAL);

thread_local std::string last_error;

osq_status fail(osq_status s, const char* message) {
  last_error = message;
  return s;
}

template <class F>
osq_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return OSQ_OK;
  } catch (const orbsplice::Error& e) {
    return fail(static_cast<osq_status>(static_cast<int>(e.code()) + 1), e.what());
  } catch (const std::bad_alloc&) {
    return fail(OSQ_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(OSQ_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw orbsplice::Error(ErrorCode::InvalidArgument, std::string("null ") + what);
}

osq_status emit(const osq_graph* g, char** out, int* passed,
                orbsplice::CommandOutput (*make)(const orbsplice::DecoratedGraph&, bool), osq_format fmt) {
  return guarded([&] {
    require(g, "graph");
    require(out, "output");
    auto result = make(g->value, fmt == OSQ_FORMAT_JSON);
    *out = copy_string(result.text);
    if (passed) *passed = result.passed ? 1 : 0;
  });
}

template <class F>
osq_status new_graph(const osq_graph* g, osq_graph** out, F&& transform) {
  return guarded([&] {
    require(g, "graph");
    require(out, "output");
    *out = new osq_graph{transform(g->value)};
  });
}

template <class F>
osq_status new_group(const osq_graph* g, osq_group** out, F&& compute) {
  return guarded([&] {
    require(g, "graph");
    require(out, "output");
    *out = new osq_group{compute(g->value)};
  });
}

}  // namespace

extern "C" {

const char* osq_status_name(osq_status status) {
  if (status == OSQ_OK) return "Ok";
  if (status < OSQ_OK || status > OSQ_ERR_INTERNAL) return "Unknown";
  return orbsplice::error_code_name(static_cast<ErrorCode>(static_cast<int>(status) - 1));
}

const char* osq_last_error(void) { return last_error.c_str(); }

void osq_string_free(char* s) { std::free(s); }

osq_status osq_graph_parse(const char* text, osq_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output");
    *out = new osq_graph{orbsplice::parse_graph(text)};
  });
}

osq_status osq_graph_load(const char* path, osq_graph** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "output");
    *out = new osq_graph{orbsplice::load_graph(path)};
  });
}

void osq_graph_free(osq_graph* g) { delete g; }

osq_status osq_graph_serialize(const osq_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "output");
    *out = copy_string(orbsplice::serialize_graph(g->value));
  });
}

size_t osq_graph_vertex_count(const osq_graph* g) { return g ? g->value.graph().vertex_count() : 0; }

osq_status osq_graph_blow_up_free(const osq_graph* g, const char* v, osq_graph** out) {
  return new_graph(g, out, [&](const orbsplice::DecoratedGraph& dg) {
    require(v, "vertex");
    return orbsplice::blow_up_free(dg, v);
  });
}

osq_status osq_graph_blow_up_edge(const osq_graph* g, const char* v, const char* w, osq_graph** out) {
  return new_graph(g, out, [&](const orbsplice::DecoratedGraph& dg) {
    require(v, "vertex");
    require(w, "vertex");
    return orbsplice::blow_up_edge(dg, v, w);
  });
}

osq_status osq_graph_blow_down(const osq_graph* g, const char* u, osq_graph** out) {
  return new_graph(g, out, [&](const orbsplice::DecoratedGraph& dg) {
    require(u, "vertex");
    return orbsplice::blow_down(dg, u);
  });
}

osq_status osq_discriminant_group(const osq_graph* g, osq_group** out) {
  return new_group(g, out, [](const orbsplice::DecoratedGraph& dg) {
    orbsplice::require_negative_definite_tree(dg.graph());
    return orbsplice::discriminant_group(dg.graph());
  });
}

osq_status osq_orbifold_homology(const osq_graph* g, osq_group** out) {
  return new_group(g, out, [](const orbsplice::DecoratedGraph& dg) {
    orbsplice::require_negative_definite_tree(dg.graph());
    return orbsplice::orbifold_homology(dg);
  });
}

osq_status osq_projection_kernel(const osq_graph* g, osq_group** out) {
  return new_group(g, out, [](const orbsplice::DecoratedGraph& dg) {
    orbsplice::require_negative_definite_tree(dg.graph());
    return orbsplice::kernel_type(orbsplice::projection_hom(dg));
  });
}

void osq_group_free(osq_group* grp) { delete grp; }

size_t osq_group_factor_count(const osq_group* grp) { return grp ? grp->value.invariant_factors().size() : 0; }

size_t osq_group_free_rank(const osq_group* grp) { return grp ? grp->value.free_rank() : 0; }

osq_status osq_group_factor(const osq_group* grp, size_t k, char** out) {
  return guarded([&] {
    require(grp, "group");
    require(out, "output");
    const auto& fs = grp->value.invariant_factors();
    if (k >= fs.size()) throw orbsplice::Error(ErrorCode::InvalidArgument, "invariant factor index out of range");
    *out = copy_string(orbsplice::to_string(fs[k]));
  });
}

osq_status osq_group_order(const osq_group* grp, char** out) {
  return guarded([&] {
    require(grp, "group");
    require(out, "output");
    auto order = grp->value.order();
    if (!order) throw orbsplice::Error(ErrorCode::InvalidArgument, "group is infinite");
    *out = copy_string(orbsplice::to_string(*order));
  });
}

osq_status osq_group_format(const osq_group* grp, char** out) {
  return guarded([&] {
    require(grp, "group");
    require(out, "output");
    *out = copy_string(orbsplice::format_group(grp->value));
  });
}

osq_status osq_validate(const osq_graph* g, osq_format fmt, char** out, int* passed) {
  return emit(g, out, passed, orbsplice::report_validate, fmt);
}

osq_status osq_homology(const osq_graph* g, int orbifold, osq_format fmt, char** out, int* passed) {
  return guarded([&] {
    require(g, "graph");
    require(out, "output");
    auto r = orbsplice::report_homology(g->value, orbifold != 0, fmt == OSQ_FORMAT_JSON);
    *out = copy_string(r.text);
    if (passed) *passed = r.passed;
  });
}

osq_status osq_linking(const osq_graph* g, osq_format fmt, char** out) {
  return emit(g, out, nullptr, orbsplice::report_linking, fmt);
}

osq_status osq_rep(const osq_graph* g, int orbifold, osq_format fmt, char** out, int* passed) {
  return guarded([&] {
    require(g, "graph");
    require(out, "output");
    auto r = orbsplice::report_rep(g->value, orbifold != 0, fmt == OSQ_FORMAT_JSON);
    *out = copy_string(r.text);
    if (passed) *passed = r.passed;
  });
}

osq_status osq_splice(const osq_graph* g, int check_semigroup, int check_congruence, osq_format fmt, char** out,
                      int* passed) {
  return guarded([&] {
    require(g, "graph");
    require(out, "output");
    auto r = orbsplice::report_splice(g->value, check_semigroup != 0, check_congruence != 0, fmt == OSQ_FORMAT_JSON);
    *out = copy_string(r.text);
    if (passed) *passed = r.passed;
  });
}

osq_status osq_equations(const osq_graph* g, int substitute, size_t cap, osq_format fmt, char** out, int* passed) {
  return guarded([&] {
    require(g, "graph");
    require(out, "output");
    auto r = orbsplice::report_equations(g->value, substitute != 0, cap ? cap : orbsplice::kDefaultMonomialCap,
                                         fmt == OSQ_FORMAT_JSON);
    *out = copy_string(r.text);
    if (passed) *passed = r.passed;
  });
}

osq_status osq_graph_format(const osq_graph* g, osq_format fmt, char** out) {
  return emit(g, out, nullptr, orbsplice::report_graph, fmt);
}

osq_status osq_render_dot(const osq_graph* g, int splice, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "output");
    *out = copy_string(splice ? orbsplice::render_dot(orbsplice::splice_diagram(g->value.graph()))
                              : orbsplice::render_dot(g->value));
  });
}

osq_status osq_invariant_report(const char* name, const osq_graph* g, osq_format fmt, char** out, int* passed) {
  return guarded([&] {
    require(name, "name");
    require(g, "graph");
    require(out, "output");
    auto r = orbsplice::invariant_report(name, g->value);
    *out = copy_string(fmt == OSQ_FORMAT_JSON ? orbsplice::to_json(r).dump(2) + "\n"
                                              : orbsplice::format_invariant_report(r));
    if (passed) *passed = r.passed();
  });
}

}  // extern "C"
