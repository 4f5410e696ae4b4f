#include "fockport.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <new>
#include <string>

#include "fockport/error.hpp"
#include "fockport/grid_io.hpp"
#include "fockport/oracle.hpp"
#include "fockport/phase.hpp"
#include "fockport/protocol.hpp"
#include "fockport/states.hpp"

struct fp_target {
  fockport::TargetCoeffs value;
};
struct fp_resource {
  fockport::ResourceCoeffs value;
};
struct fp_grid {
  fockport::FidelityGrid value;
};

namespace {

thread_local std::string last_error;

fp_status status_for(fockport::ErrorKind kind) {
  using fockport::ErrorKind;
  switch (kind) {
    case ErrorKind::InvalidArgument: return FP_ERR_INVALID_ARGUMENT;
    case ErrorKind::Range: return FP_ERR_RANGE;
    case ErrorKind::Truncation: return FP_ERR_TRUNCATION;
    case ErrorKind::UndefinedOutcome: return FP_ERR_UNDEFINED_OUTCOME;
    case ErrorKind::Size: return FP_ERR_SIZE;
    case ErrorKind::Io: return FP_ERR_IO;
  }
  return FP_ERR_INTERNAL;
}

template <typename Fn>
fp_status guarded(Fn&& fn) {
  try {
    fn();
    return FP_OK;
  } catch (const fockport::Error& e) {
    last_error = e.what();
    return status_for(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return FP_ERR_INTERNAL;
}

void require(const void* p, const char* what) {
  if (p == nullptr) {
    fockport::fail(fockport::ErrorKind::InvalidArgument,
                   std::string(what) + " must not be NULL");
  }
}

template <typename Target>
fp_status make_target(fp_target** out, Target&& build) {
  return guarded([&] {
    require(out, "out");
    *out = new fp_target{build()};
  });
}

}  // namespace

extern "C" {

const char* fp_version(void) { return "0.1.0"; }

const char* fp_last_error(void) { return last_error.c_str(); }

const char* fp_status_name(fp_status status) {
  switch (status) {
    case FP_OK: return "ok";
    case FP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case FP_ERR_RANGE: return "out of range";
    case FP_ERR_TRUNCATION: return "truncation";
    case FP_ERR_UNDEFINED_OUTCOME: return "undefined outcome";
    case FP_ERR_SIZE: return "size limit";
    case FP_ERR_IO: return "i/o";
    case FP_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

fp_status fp_target_cat(double alpha_re, double alpha_im, int cutoff,
                        fp_target** out) {
  return make_target(out, [&] {
    return fockport::cat_coeffs({alpha_re, alpha_im}, cutoff);
  });
}

fp_status fp_target_coherent(double alpha_re, double alpha_im, int cutoff,
                             fp_target** out) {
  return make_target(out, [&] {
    return fockport::coherent_coeffs({alpha_re, alpha_im}, cutoff);
  });
}

fp_status fp_target_fock(int k, int cutoff, fp_target** out) {
  return make_target(out, [&] { return fockport::fock_coeffs(k, cutoff); });
}

fp_status fp_minimal_cutoff(double abs_alpha, int even_cat, int* cutoff) {
  return guarded([&] {
    require(cutoff, "cutoff");
    if (!(abs_alpha >= 0.0) || !std::isfinite(abs_alpha)) {
      fockport::fail(fockport::ErrorKind::InvalidArgument,
                     "|alpha| must be finite and >= 0");
    }
    *cutoff = fockport::minimal_cutoff(
        abs_alpha, even_cat ? fockport::TargetKind::EvenCat
                            : fockport::TargetKind::Coherent);
  });
}

void fp_target_free(fp_target* target) { delete target; }

size_t fp_target_size(const fp_target* target) {
  return target ? target->value.coeffs.size() : 0;
}

fp_status fp_target_coeff(const fp_target* target, size_t index, double* re,
                          double* im) {
  return guarded([&] {
    require(target, "target");
    if (index >= target->value.coeffs.size()) {
      fockport::fail(fockport::ErrorKind::Range, "coefficient index");
    }
    if (re) *re = target->value.coeffs[index].real();
    if (im) *im = target->value.coeffs[index].imag();
  });
}

const char* fp_target_label(const fp_target* target) {
  return target ? target->value.label.c_str() : "";
}

fp_status fp_target_write_csv(const fp_target* target, const char* path) {
  return guarded([&] {
    require(target, "target");
    require(path, "path");
    fockport::write_file_atomic(fockport::resolve_output_path(path),
                                fockport::coeffs_to_csv(target->value.coeffs));
  });
}

fp_status fp_resource_create(int n_in, int m_in, double beta,
                             fp_resource** out) {
  return guarded([&] {
    require(out, "out");
    *out = new fp_resource{fockport::resource_coeffs({n_in, m_in, beta})};
  });
}

void fp_resource_free(fp_resource* resource) { delete resource; }

size_t fp_resource_size(const fp_resource* resource) {
  return resource ? resource->value.coeffs.size() : 0;
}

fp_status fp_resource_coeff(const fp_resource* resource, size_t index,
                            double* re, double* im) {
  return guarded([&] {
    require(resource, "resource");
    if (index >= resource->value.coeffs.size()) {
      fockport::fail(fockport::ErrorKind::Range, "coefficient index");
    }
    if (re) *re = resource->value.coeffs[index].real();
    if (im) *im = resource->value.coeffs[index].imag();
  });
}

fp_status fp_resource_write_csv(const fp_resource* resource,
                                const char* path) {
  return guarded([&] {
    require(resource, "resource");
    require(path, "path");
    fockport::write_file_atomic(
        fockport::resolve_output_path(path),
        fockport::coeffs_to_csv(resource->value.coeffs));
  });
}

fp_status fp_number_sum_prob(const fp_target* target,
                             const fp_resource* resource, int q, double* p) {
  return guarded([&] {
    require(target, "target");
    require(resource, "resource");
    require(p, "p");
    *p = fockport::number_sum_prob(target->value, resource->value, q);
  });
}

fp_status fp_fidelity_given_q(const fp_target* target,
                              const fp_resource* resource, int q, double* f) {
  return guarded([&] {
    require(target, "target");
    require(resource, "resource");
    require(f, "f");
    *f = fockport::fidelity_given_q(target->value, resource->value, q);
  });
}

fp_status fp_average_fidelity(const fp_target* target,
                              const fp_resource* resource, double* f) {
  return guarded([&] {
    require(target, "target");
    require(resource, "resource");
    require(f, "f");
    *f = fockport::average_fidelity(target->value, resource->value);
  });
}

fp_status fp_classical_baseline(const fp_target* target,
                                const fp_resource* resource, double* f) {
  return guarded([&] {
    require(target, "target");
    require(resource, "resource");
    require(f, "f");
    *f = fockport::classical_baseline(target->value, resource->value.params);
  });
}

fp_status fp_outcome_distribution(const fp_target* target,
                                  const fp_resource* resource, double* p,
                                  double* f, size_t capacity, size_t* count) {
  return guarded([&] {
    require(target, "target");
    require(resource, "resource");
    require(count, "count");
    const auto dist =
        fockport::outcome_distribution(target->value, resource->value);
    *count = dist.p.size();
    if (p == nullptr && f == nullptr) return;
    if (capacity < dist.p.size()) {
      fockport::fail(fockport::ErrorKind::Range,
                     "distribution buffers too small");
    }
    for (std::size_t i = 0; i < dist.p.size(); ++i) {
      if (p) p[i] = dist.p[i];
      if (f) f[i] = dist.f[i];
    }
  });
}

fp_status fp_output_state(const fp_target* target,
                          const fp_resource* resource, int q, double phi_minus,
                          double* re, double* im, size_t capacity,
                          size_t* dim) {
  return guarded([&] {
    require(target, "target");
    require(resource, "resource");
    require(dim, "dim");
    const auto rho =
        fockport::output_state(target->value, resource->value, q, phi_minus);
    const auto n = static_cast<std::size_t>(rho.dimension());
    *dim = n;
    if (re == nullptr && im == nullptr) return;
    if (capacity < n * n) {
      fockport::fail(fockport::ErrorKind::Range, "output buffers too small");
    }
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        const auto v = rho.matrix(static_cast<Eigen::Index>(r),
                                  static_cast<Eigen::Index>(c));
        if (re) re[r * n + c] = v.real();
        if (im) im[r * n + c] = v.imag();
      }
    }
  });
}

fp_status fp_joint_phase_prob(const fp_resource* resource, double phi_minus,
                              fp_phase_frame frame, double* p) {
  return guarded([&] {
    require(resource, "resource");
    require(p, "p");
    *p = fockport::joint_phase_prob(resource->value, phi_minus,
                                    frame == FP_FRAME_RESOURCE
                                        ? fockport::PhaseFrame::Resource
                                        : fockport::PhaseFrame::Rotation);
  });
}

fp_status fp_phase_argmax(const fp_resource* resource, int grid_size,
                          double* phi_star, double* p_max) {
  return guarded([&] {
    require(resource, "resource");
    const auto r = fockport::phase_argmax(resource->value, grid_size);
    if (phi_star) *phi_star = r.phi_star;
    if (p_max) *p_max = r.p_max;
  });
}

fp_status fp_fidelity_sweep(const fp_target* target, int total,
                            const double* beta_axis, size_t n_beta,
                            const int* twice_m_axis, size_t n_m,
                            unsigned threads, fp_grid** out) {
  return guarded([&] {
    require(target, "target");
    require(beta_axis, "beta_axis");
    require(twice_m_axis, "twice_m_axis");
    require(out, "out");
    auto grid = fockport::fidelity_sweep(
        target->value, total, {beta_axis, beta_axis + n_beta},
        {twice_m_axis, twice_m_axis + n_m}, {threads});
    *out = new fp_grid{std::move(grid)};
  });
}

fp_status fp_phase_argmax_map(int total, const double* beta_axis,
                              size_t n_beta, const int* twice_m_axis,
                              size_t n_m, int grid_size, unsigned threads,
                              fp_grid** out) {
  return guarded([&] {
    require(beta_axis, "beta_axis");
    require(twice_m_axis, "twice_m_axis");
    require(out, "out");
    auto grid = fockport::phase_argmax_map(
        total, {beta_axis, beta_axis + n_beta},
        {twice_m_axis, twice_m_axis + n_m}, grid_size, {threads});
    *out = new fp_grid{std::move(grid)};
  });
}

void fp_grid_free(fp_grid* grid) { delete grid; }

void fp_grid_shape(const fp_grid* grid, size_t* n_beta, size_t* n_m) {
  if (n_beta) *n_beta = grid ? grid->value.width() : 0;
  if (n_m) *n_m = grid ? grid->value.height() : 0;
}

double fp_grid_value(const fp_grid* grid, size_t i_m, size_t i_beta) {
  if (!grid || i_m >= grid->value.height() || i_beta >= grid->value.width()) {
    return std::nan("");
  }
  return grid->value.at(i_m, i_beta);
}

size_t fp_grid_invalid_count(const fp_grid* grid) {
  return grid ? grid->value.invalid_count() : 0;
}

fp_status fp_grid_write_csv(const fp_grid* grid, const char* path) {
  return guarded([&] {
    require(grid, "grid");
    require(path, "path");
    fockport::write_file_atomic(fockport::resolve_output_path(path),
                                fockport::grid_to_csv(grid->value));
  });
}

fp_status fp_grid_write_pgm(const fp_grid* grid, const char* path) {
  return guarded([&] {
    require(grid, "grid");
    require(path, "path");
    fockport::write_file_atomic(fockport::resolve_output_path(path),
                                fockport::grid_to_pgm(grid->value));
  });
}

fp_status fp_write_file_atomic(const char* path, const char* data,
                               size_t size) {
  return guarded([&] {
    require(path, "path");
    if (size > 0) require(data, "data");
    fockport::write_file_atomic(fockport::resolve_output_path(path),
                                std::string(data ? data : "", size));
  });
}

fp_status fp_interior_beta_axis(int steps, double* out) {
  return guarded([&] {
    require(out, "out");
    const auto axis = fockport::interior_beta_axis(steps);
    std::copy(axis.begin(), axis.end(), out);
  });
}

fp_status fp_verify_resource(int n_in, int m_in, double beta, int max_total,
                             fp_resource_check* out) {
  return guarded([&] {
    require(out, "out");
    const auto r = fockport::oracle::verify_resource(
        {n_in, m_in, beta}, fockport::oracle::kResourceTolerance,
        max_total > 0 ? max_total : fockport::oracle::kMaxResourceTotal);
    *out = {r.params.n_in,  r.params.m_in,   r.params.beta, r.overlap_abs,
            r.max_deviation, r.residual_phase, r.pass ? 1 : 0};
  });
}

}  // extern "C"
