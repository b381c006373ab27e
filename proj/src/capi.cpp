#include "sosquartic.h"

#include "sosq/certify.hpp"
#include "sosq/cones.hpp"
#include "sosq/error.hpp"
#include "sosq/halfdeg.hpp"
#include "sosq/oracle.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

struct sq_membership {
  sosq::Membership value;
};

struct sq_certificate {
  sosq::Certificate value;
};

struct sq_sample_report {
  sosq::oracle::SampleReport value;
};

namespace {

thread_local std::string last_error;

sq_status to_status(sosq::ErrorCode code) {
  using sosq::ErrorCode;
  switch (code) {
    case ErrorCode::Parse: return SQ_ERR_PARSE;
    case ErrorCode::UnsupportedN: return SQ_ERR_UNSUPPORTED_N;
    case ErrorCode::OutOfRange: return SQ_ERR_OUT_OF_RANGE;
    case ErrorCode::NotInSosCone: return SQ_ERR_NOT_IN_SOS_CONE;
    case ErrorCode::NotGloballyPsd: return SQ_ERR_NOT_GLOBALLY_PSD;
    case ErrorCode::DimensionMismatch: return SQ_ERR_DIMENSION_MISMATCH;
    case ErrorCode::NotSymmetric: return SQ_ERR_NOT_SYMMETRIC;
    case ErrorCode::NotHomogeneousQuartic: return SQ_ERR_NOT_HOMOGENEOUS_QUARTIC;
    case ErrorCode::DegenerateBasis: return SQ_ERR_DEGENERATE_BASIS;
    case ErrorCode::TooManyVariables: return SQ_ERR_TOO_MANY_VARIABLES;
  }
  return SQ_ERR_INTERNAL;
}

sq_status fail(sq_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <class Body>
sq_status guarded(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const sosq::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SQ_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SQ_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

char* dup_rational(const sosq::Rational& q) { return dup_string(sosq::to_string(q)); }

sosq::InvariantQuartic parse_form(const char* a, const char* b) {
  return {sosq::parse_rational(a), sosq::parse_rational(b)};
}

sq_position to_position(sosq::Position p) {
  switch (p) {
    case sosq::Position::Outside: return SQ_OUTSIDE;
    case sosq::Position::Boundary: return SQ_BOUNDARY;
    case sosq::Position::Interior: return SQ_INTERIOR;
  }
  return SQ_OUTSIDE;
}

#define SQ_REQUIRE(cond)                                                    \
  do {                                                                      \
    if (!(cond)) return fail(SQ_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

const char* sq_version(void) { return "1.0.0"; }

const char* sq_status_name(sq_status status) {
  switch (status) {
    case SQ_OK: return "Ok";
    case SQ_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case SQ_ERR_PARSE: return "Parse";
    case SQ_ERR_UNSUPPORTED_N: return "UnsupportedN";
    case SQ_ERR_OUT_OF_RANGE: return "OutOfRange";
    case SQ_ERR_NOT_IN_SOS_CONE: return "NotInSosCone";
    case SQ_ERR_NOT_GLOBALLY_PSD: return "NotGloballyPsd";
    case SQ_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
    case SQ_ERR_NOT_SYMMETRIC: return "NotSymmetric";
    case SQ_ERR_NOT_HOMOGENEOUS_QUARTIC: return "NotHomogeneousQuartic";
    case SQ_ERR_DEGENERATE_BASIS: return "DegenerateBasis";
    case SQ_ERR_TOO_MANY_VARIABLES: return "TooManyVariables";
    case SQ_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* sq_position_name(sq_position position) {
  switch (position) {
    case SQ_OUTSIDE: return "Outside";
    case SQ_BOUNDARY: return "Boundary";
    case SQ_INTERIOR: return "Interior";
  }
  return "Unknown";
}

const char* sq_last_error_message(void) { return last_error.c_str(); }

void sq_string_free(char* s) { std::free(s); }

sq_status sq_rational_canonical(const char* text, char** out) {
  SQ_REQUIRE(text != nullptr && out != nullptr);
  return guarded([&] {
    *out = dup_rational(sosq::parse_rational(text));
    return SQ_OK;
  });
}

sq_status sq_classify(int n, const char* a, const char* b, sq_membership** out) {
  SQ_REQUIRE(a != nullptr && b != nullptr && out != nullptr);
  return guarded([&] {
    auto m = std::make_unique<sq_membership>();
    m->value = sosq::classify(n, parse_form(a, b));
    *out = m.release();
    return SQ_OK;
  });
}

void sq_membership_free(sq_membership* m) { delete m; }

sq_position sq_membership_psd(const sq_membership* m) {
  return m ? to_position(m->value.psd) : SQ_OUTSIDE;
}

sq_position sq_membership_sos(const sq_membership* m) {
  return m ? to_position(m->value.sos) : SQ_OUTSIDE;
}

size_t sq_membership_witness_size(const sq_membership* m) {
  return (m && m->value.witness) ? m->value.witness->coordinates.size() : 0;
}

const int64_t* sq_membership_witness(const sq_membership* m) {
  return (m && m->value.witness) ? m->value.witness->coordinates.data() : nullptr;
}

int sq_membership_witness_l(const sq_membership* m) {
  return (m && m->value.witness) ? m->value.witness->l : 0;
}

int sq_membership_has_sos_coords(const sq_membership* m) {
  return (m && m->value.sos_coords) ? 1 : 0;
}

sq_status sq_membership_sos_coords(const sq_membership* m, int raw, char** s1, char** s2) {
  SQ_REQUIRE(m != nullptr && s1 != nullptr && s2 != nullptr);
  return guarded([&] {
    const auto& c = m->value.raw_sos_coords;
    if (!raw && !m->value.sos_coords)
      return fail(SQ_ERR_NOT_IN_SOS_CONE, "form is not in the SOS cone: coordinates (a', b') = (" +
                                              sosq::to_string(c.s1) + ", " +
                                              sosq::to_string(c.s2) + ")");
    char* first = dup_rational(c.s1);
    char* second = nullptr;
    try {
      second = dup_rational(c.s2);
    } catch (...) {
      std::free(first);
      throw;
    }
    *s1 = first;
    *s2 = second;
    return SQ_OK;
  });
}

sq_status sq_global_psd(int n, const char* a, const char* b, int* out) {
  SQ_REQUIRE(a != nullptr && b != nullptr && out != nullptr);
  return guarded([&] {
    *out = sosq::global_psd(n, parse_form(a, b)) ? 1 : 0;
    return SQ_OK;
  });
}

sq_status sq_extremal_quantity(int n, sq_quantity q, char** out) {
  SQ_REQUIRE(out != nullptr);
  return guarded([&] {
    const auto range = sosq::psd_range(n);
    const auto rays = sosq::extremal_rays(n);
    const auto gens = sosq::sos_generators(n);
    const sosq::Rational* value = nullptr;
    switch (q) {
      case SQ_ALPHA: value = &range.alpha; break;
      case SQ_BETA: value = &range.beta; break;
      case SQ_F_A: value = &rays.F.a; break;
      case SQ_F_B: value = &rays.F.b; break;
      case SQ_G_A: value = &rays.G.a; break;
      case SQ_G_B: value = &rays.G.b; break;
      case SQ_S1_A: value = &gens.S1.a; break;
      case SQ_S1_B: value = &gens.S1.b; break;
      case SQ_S2_A: value = &gens.S2.a; break;
      case SQ_S2_B: value = &gens.S2.b; break;
    }
    if (value == nullptr) return fail(SQ_ERR_INVALID_ARGUMENT, "unknown quantity");
    *out = dup_rational(*value);
    return SQ_OK;
  });
}

sq_status sq_phi(int n, int l, char** out) {
  SQ_REQUIRE(out != nullptr);
  return guarded([&] {
    *out = dup_rational(sosq::phi(n, l));
    return SQ_OK;
  });
}

sq_status sq_cones_equal(int n, int* out) {
  SQ_REQUIRE(out != nullptr);
  return guarded([&] {
    *out = sosq::cones_equal(n) ? 1 : 0;
    return SQ_OK;
  });
}

sq_status sq_gap_witness(int n, int* present, char** a, char** b) {
  SQ_REQUIRE(present != nullptr && a != nullptr && b != nullptr);
  return guarded([&] {
    const auto w = sosq::gap_witness(n);
    if (!w) {
      *present = 0;
      return SQ_OK;
    }
    char* wa = dup_rational(w->a);
    char* wb = nullptr;
    try {
      wb = dup_rational(w->b);
    } catch (...) {
      std::free(wa);
      throw;
    }
    *present = 1;
    *a = wa;
    *b = wb;
    return SQ_OK;
  });
}

sq_status sq_certify(int n, const char* a, const char* b, sq_certificate** out) {
  SQ_REQUIRE(a != nullptr && b != nullptr && out != nullptr);
  return guarded([&] {
    auto c = std::make_unique<sq_certificate>();
    c->value = sosq::cert_for(n, parse_form(a, b));
    *out = c.release();
    return SQ_OK;
  });
}

sq_status sq_certify_global(int n, const char* a, const char* b, sq_certificate** out) {
  SQ_REQUIRE(a != nullptr && b != nullptr && out != nullptr);
  return guarded([&] {
    auto c = std::make_unique<sq_certificate>();
    c->value = sosq::cert_global(n, parse_form(a, b));
    *out = c.release();
    return SQ_OK;
  });
}

sq_status sq_certificate_parse(const char* text, size_t length, sq_certificate** out) {
  SQ_REQUIRE(text != nullptr && out != nullptr);
  return guarded([&] {
    auto c = std::make_unique<sq_certificate>();
    c->value = sosq::parse_certificate(std::string_view(text, length));
    *out = c.release();
    return SQ_OK;
  });
}

sq_status sq_certificate_serialize(const sq_certificate* c, char** out) {
  SQ_REQUIRE(c != nullptr && out != nullptr);
  return guarded([&] {
    *out = dup_string(sosq::serialize(c->value));
    return SQ_OK;
  });
}

int sq_certificate_verify(const sq_certificate* c) {
  return (c && sosq::verify(c->value)) ? 1 : 0;
}

int sq_certificate_n(const sq_certificate* c) { return c ? c->value.n : 0; }

size_t sq_certificate_square_count(const sq_certificate* c) {
  return c ? c->value.squares.size() : 0;
}

int sq_certificate_modulo_p1(const sq_certificate* c) {
  return (c && c->value.modulo_p1) ? 1 : 0;
}

void sq_certificate_free(sq_certificate* c) { delete c; }

sq_status sq_sample_min(int n, const char* a, const char* b, uint64_t samples, uint64_t seed,
                        unsigned threads, sq_sample_report** out) {
  SQ_REQUIRE(a != nullptr && b != nullptr && out != nullptr);
  return guarded([&] {
    auto r = std::make_unique<sq_sample_report>();
    r->value = sosq::oracle::sample_min(n, parse_form(a, b), samples, seed, threads);
    *out = r.release();
    return SQ_OK;
  });
}

double sq_sample_report_min(const sq_sample_report* r) { return r ? r->value.min_value : 0.0; }

size_t sq_sample_report_dim(const sq_sample_report* r) {
  return r ? r->value.argmin_point.size() : 0;
}

const double* sq_sample_report_point(const sq_sample_report* r) {
  return (r && !r->value.argmin_point.empty()) ? r->value.argmin_point.data() : nullptr;
}

uint64_t sq_sample_report_samples(const sq_sample_report* r) { return r ? r->value.samples : 0; }

uint64_t sq_sample_report_seed(const sq_sample_report* r) { return r ? r->value.seed : 0; }

void sq_sample_report_free(sq_sample_report* r) { delete r; }

}  // extern "C"
