#include "cmhopf/cmhopf.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cmhopf/cm_fdb.hpp"
#include "cmhopf/render.hpp"
#include "cmhopf/verify.hpp"

struct cmh_element {
  std::variant<cmhopf::AlgebraElement, cmhopf::TensorElement> value;
  int                                                          degree = 0;
  std::optional<std::vector<cmhopf::TableRow>>                 table;
};

struct cmh_report {
  cmhopf::VerifyReport report;
};

namespace {

thread_local std::string last_error;

cmh_status fail(cmh_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body, mapping exceptions to status codes. invalid_argument maps to
// the caller's choice so parsers can report CMH_ERR_PARSE.
template <typename F>
cmh_status guarded(F&& body, cmh_status invalid = CMH_ERR_INVALID_ARGUMENT) {
  try {
    last_error.clear();
    return body();
  } catch (std::invalid_argument const& e) {
    return fail(invalid, e.what());
  } catch (std::out_of_range const& e) {
    return fail(CMH_ERR_OUT_OF_RANGE, e.what());
  } catch (std::bad_alloc const&) {
    return fail(CMH_ERR_INTERNAL, "out of memory");
  } catch (std::exception const& e) {
    return fail(CMH_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CMH_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(std::string const& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) {
    throw std::bad_alloc();
  }
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::optional<cmhopf::Family> family_of(cmh_coords coords) {
  switch (coords) {
    case CMH_COORDS_DELTA:
      return cmhopf::Family::delta;
    case CMH_COORDS_A:
      return cmhopf::Family::a;
    case CMH_COORDS_GAMMA:
      return cmhopf::Family::gamma;
  }
  return std::nullopt;
}

cmhopf::Monomial monomial_of(int const* factors, std::size_t len) {
  std::vector<int> v;
  if (len != 0) {
    if (factors == nullptr) {
      throw std::invalid_argument("null factor array with nonzero length");
    }
    v.assign(factors, factors + len);
  }
  for (int f : v) {
    if (f < 1) {
      throw std::invalid_argument("generator indices must be positive");
    }
  }
  return cmhopf::Monomial(std::move(v));
}

cmh_status make_element(int n, cmh_coords coords, bool coproduct, cmh_element** out) {
  if (out == nullptr) {
    return fail(CMH_ERR_NULL_ARGUMENT, "out is null");
  }
  *out = nullptr;
  if (n < 1) {
    return fail(CMH_ERR_INVALID_ARGUMENT, "degree must be at least 1");
  }
  auto const family = family_of(coords);
  if (!family) {
    return fail(CMH_ERR_INVALID_ARGUMENT, "unknown coordinate family");
  }
  return guarded([&] {
    auto e    = std::make_unique<cmh_element>();
    e->degree = n;
    if (coproduct) {
      e->value = *family == cmhopf::Family::a ? cmhopf::coproduct_a(n)
                                              : cmhopf::coproduct_delta(n, *family);
      e->table = cmhopf::coproduct_table(n, *family);
    } else {
      e->value = *family == cmhopf::Family::a ? cmhopf::antipode_a(n)
                                              : cmhopf::antipode_delta(n, *family);
      e->table = cmhopf::antipode_table(n, *family);
    }
    *out = e.release();
    return CMH_OK;
  });
}

}  // namespace

extern "C" {

const char* cmh_last_error(void) {
  return last_error.c_str();
}

void cmh_string_free(char* s) {
  std::free(s);
}

cmh_status cmh_coproduct(int n, cmh_coords coords, cmh_element** out) {
  return make_element(n, coords, true, out);
}

cmh_status cmh_antipode(int n, cmh_coords coords, cmh_element** out) {
  return make_element(n, coords, false, out);
}

cmh_status cmh_element_from_json(const char* json, cmh_element** out) {
  if (json == nullptr || out == nullptr) {
    return fail(CMH_ERR_NULL_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded(
      [&] {
        auto e = std::make_unique<cmh_element>();
        try {
          e->value = cmhopf::algebra_element_from_json(json);
        } catch (std::invalid_argument const& algebra_error) {
          try {
            e->value = cmhopf::tensor_element_from_json(json);
          } catch (std::invalid_argument const& tensor_error) {
            throw std::invalid_argument(std::string("not an algebra element (")
                                        + algebra_error.what() + ") nor a tensor element ("
                                        + tensor_error.what() + ")");
          }
        }
        *out = e.release();
        return CMH_OK;
      },
      CMH_ERR_PARSE);
}

cmh_status cmh_element_render(const cmh_element* e, cmh_format format, char** out) {
  if (e == nullptr || out == nullptr) {
    return fail(CMH_ERR_NULL_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    std::string s;
    switch (format) {
      case CMH_FORMAT_TABLE:
        if (!e->table) {
          return fail(CMH_ERR_UNSUPPORTED, "element has no coefficient table");
        }
        s = cmhopf::render_rows(*e->table);
        break;
      case CMH_FORMAT_JSON:
        s = std::visit([](auto const& x) { return cmhopf::to_json(x); }, e->value) + "\n";
        break;
      case CMH_FORMAT_TEXT:
        if (auto const* t = std::get_if<cmhopf::TensorElement>(&e->value)) {
          s = e->degree > 0 ? cmhopf::coproduct_text(*t, e->degree) : cmhopf::to_text(*t);
        } else {
          auto const& a = std::get<cmhopf::AlgebraElement>(e->value);
          s = e->degree > 0 ? cmhopf::antipode_text(a, e->degree) : cmhopf::to_text(a);
        }
        s += "\n";
        break;
      default:
        return fail(CMH_ERR_INVALID_ARGUMENT, "unknown format");
    }
    *out = copy_string(s);
    return CMH_OK;
  });
}

cmh_status cmh_element_kind(const cmh_element* e, cmh_kind* out) {
  if (e == nullptr || out == nullptr) {
    return fail(CMH_ERR_NULL_ARGUMENT, "null argument");
  }
  *out = std::holds_alternative<cmhopf::TensorElement>(e->value) ? CMH_KIND_TENSOR
                                                                  : CMH_KIND_ALGEBRA;
  return CMH_OK;
}

cmh_status cmh_element_term_count(const cmh_element* e, size_t* out) {
  if (e == nullptr || out == nullptr) {
    return fail(CMH_ERR_NULL_ARGUMENT, "null argument");
  }
  *out = std::visit([](auto const& x) { return x.terms().size(); }, e->value);
  return CMH_OK;
}

cmh_status cmh_element_coefficient(const cmh_element* e,
                                   const int*         left,
                                   size_t             left_len,
                                   const int*         right,
                                   size_t             right_len,
                                   char**             out) {
  if (e == nullptr || out == nullptr) {
    return fail(CMH_ERR_NULL_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    cmhopf::Rational c;
    if (auto const* t = std::get_if<cmhopf::TensorElement>(&e->value)) {
      c = t->coefficient(monomial_of(left, left_len), monomial_of(right, right_len));
    } else {
      c = std::get<cmhopf::AlgebraElement>(e->value).coefficient(monomial_of(left, left_len));
    }
    *out = copy_string(cmhopf::to_string(c));
    return CMH_OK;
  });
}

cmh_status cmh_element_equal(const cmh_element* a, const cmh_element* b, int* out) {
  if (a == nullptr || b == nullptr || out == nullptr) {
    return fail(CMH_ERR_NULL_ARGUMENT, "null argument");
  }
  *out = a->value == b->value ? 1 : 0;
  return CMH_OK;
}

void cmh_element_free(cmh_element* e) {
  delete e;
}

cmh_status cmh_tables(int max_degree, char** out) {
  if (out == nullptr) {
    return fail(CMH_ERR_NULL_ARGUMENT, "out is null");
  }
  *out = nullptr;
  if (max_degree < 1) {
    return fail(CMH_ERR_INVALID_ARGUMENT, "degree must be at least 1");
  }
  return guarded([&] {
    *out = copy_string(cmhopf::render_tables(max_degree));
    return CMH_OK;
  });
}

cmh_status cmh_verify(const cmh_verify_options* options, cmh_report** out) {
  if (options == nullptr || out == nullptr) {
    return fail(CMH_ERR_NULL_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    cmhopf::VerifyOptions o;
    o.degree       = options->degree;
    o.seed         = options->seed;
    o.trials       = options->trials;
    o.inject_fault = options->inject_fault != 0;
    auto r         = std::make_unique<cmh_report>();
    r->report      = cmhopf::run_verification(o);
    *out           = r.release();
    return CMH_OK;
  });
}

cmh_status cmh_report_passed(const cmh_report* r, int* out) {
  if (r == nullptr || out == nullptr) {
    return fail(CMH_ERR_NULL_ARGUMENT, "null argument");
  }
  *out = r->report.passed() ? 1 : 0;
  return CMH_OK;
}

cmh_status cmh_report_check_count(const cmh_report* r, size_t* out) {
  if (r == nullptr || out == nullptr) {
    return fail(CMH_ERR_NULL_ARGUMENT, "null argument");
  }
  *out = r->report.checks.size();
  return CMH_OK;
}

cmh_status cmh_report_check(const cmh_report* r,
                            size_t            index,
                            const char**      name,
                            int*              passed,
                            const char**      detail) {
  if (r == nullptr) {
    return fail(CMH_ERR_NULL_ARGUMENT, "null argument");
  }
  if (index >= r->report.checks.size()) {
    return fail(CMH_ERR_OUT_OF_RANGE, "check index out of range");
  }
  auto const& c = r->report.checks[index];
  if (name != nullptr) {
    *name = c.name.c_str();
  }
  if (passed != nullptr) {
    *passed = c.passed ? 1 : 0;
  }
  if (detail != nullptr) {
    *detail = c.detail.c_str();
  }
  return CMH_OK;
}

cmh_status cmh_report_render(const cmh_report* r, char** out) {
  if (r == nullptr || out == nullptr) {
    return fail(CMH_ERR_NULL_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    *out = copy_string(cmhopf::render_report(r->report));
    return CMH_OK;
  });
}

void cmh_report_free(cmh_report* r) {
  delete r;
}

cmh_status cmh_conjugate(const char* u_csv, int order, char** out, int* residual_zero) {
  if (u_csv == nullptr || out == nullptr) {
    return fail(CMH_ERR_NULL_ARGUMENT, "null argument");
  }
  *out = nullptr;
  if (order < 1) {
    return fail(CMH_ERR_INVALID_ARGUMENT, "order must be at least 1");
  }
  std::vector<cmhopf::Rational> u;
  cmh_status const parsed = guarded(
      [&] {
        u = cmhopf::parse_rational_list(u_csv);
        return CMH_OK;
      },
      CMH_ERR_PARSE);
  if (parsed != CMH_OK) {
    return parsed;
  }
  return guarded([&] {
    bool zero = false;
    *out      = copy_string(cmhopf::conjugacy_text(u, order, &zero));
    if (residual_zero != nullptr) {
      *residual_zero = zero ? 1 : 0;
    }
    return CMH_OK;
  });
}

}  // extern "C"
