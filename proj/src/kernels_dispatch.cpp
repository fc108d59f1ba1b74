#include "kernels_impl.hpp"

#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace efcp::kernels {

BlockLayout BlockLayout::from_density(size_t dim, uint32_t block_size, double density) {
  if (dim == 0) throw std::invalid_argument("block layout: dim must be >= 1");
  if (block_size == 0) throw std::invalid_argument("block layout: block_size must be >= 1");
  if (!(density > 0.0) || density > 1.0) {
    throw std::invalid_argument("block layout: density must be in (0, 1]");
  }
  BlockLayout layout;
  layout.dim = dim;
  layout.block_size = block_size;
  layout.full_quota = static_cast<uint32_t>(
      std::max<long long>(1, std::llround(density * block_size)));
  const size_t nb = layout.num_blocks();
  const size_t last_width = dim - (nb - 1) * static_cast<size_t>(block_size);
  layout.last_quota =
      last_width == block_size
          ? layout.full_quota
          : static_cast<uint32_t>(std::max<long long>(
                1, std::llround(density * static_cast<double>(last_width))));
  return layout;
}

namespace {

std::atomic<int> g_threads{1};

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

Backend initial_backend() {
#ifdef EFCP_HAVE_AVX2_SOURCES
  if (cpu_has_avx2()) return Backend::Avx2;
#endif
  return Backend::Scalar;
}

std::atomic<Backend> g_backend{initial_backend()};

// The AVX2 gathers use signed 32-bit offsets.
bool fits_avx2(size_t dim, size_t kprime) {
  return dim <= static_cast<size_t>(std::numeric_limits<int32_t>::max()) &&
         kprime * 3 <= static_cast<size_t>(std::numeric_limits<int32_t>::max());
}

}  // namespace

bool avx2_supported() {
#ifdef EFCP_HAVE_AVX2_SOURCES
  return cpu_has_avx2();
#else
  return false;
#endif
}

Backend active_backend() { return g_backend.load(); }

void set_backend(Backend b) {
  if (b == Backend::Avx2 && !avx2_supported()) {
    throw std::invalid_argument("avx2 backend requested but not supported on this CPU");
  }
  g_backend.store(b);
}

Backend backend_from_name(const std::string& name) {
  if (name == "auto") return initial_backend();
  if (name == "scalar") return Backend::Scalar;
  if (name == "avx2") return Backend::Avx2;
  throw std::invalid_argument("unknown kernel backend: " + name);
}

std::string backend_name(Backend b) {
  return b == Backend::Avx2 ? "avx2" : "scalar";
}

int threads() { return g_threads.load(); }

void set_threads(int n) {
  if (n < 1) throw std::invalid_argument("threads must be >= 1");
  g_threads.store(n);
}

void parallel_chunks(size_t count, const std::function<void(size_t, size_t)>& fn) {
  const size_t nthreads = static_cast<size_t>(g_threads.load());
  if (count == 0) return;
  if (nthreads <= 1 || count == 1) {
    fn(0, count);
    return;
  }
  const size_t chunk = (count + nthreads - 1) / nthreads;
  std::vector<std::thread> workers;
  workers.reserve(nthreads - 1);
  size_t begin = chunk;  // chunk 0 runs on this thread
  for (size_t t = 1; t < nthreads && begin < count; ++t) {
    const size_t end = std::min(begin + chunk, count);
    workers.emplace_back([&fn, begin, end] { fn(begin, end); });
    begin = end;
  }
  fn(0, std::min(chunk, count));
  for (auto& w : workers) w.join();
}

void sp(const uint32_t* idx, const double* vals, size_t m, size_t kprime,
        const double* x, size_t dim, double* out) {
#ifdef EFCP_HAVE_AVX2_SOURCES
  if (g_backend.load() == Backend::Avx2 && fits_avx2(dim, kprime)) {
    detail::sp_avx2_f64(idx, vals, m, kprime, x, out);
    return;
  }
#endif
  (void)dim;
  detail::sp_scalar_f64(idx, vals, m, kprime, x, out);
}

void sp(const uint32_t* idx, const float* vals, size_t m, size_t kprime,
        const double* x, size_t dim, double* out) {
#ifdef EFCP_HAVE_AVX2_SOURCES
  if (g_backend.load() == Backend::Avx2 && fits_avx2(dim, kprime)) {
    detail::sp_avx2_f32(idx, vals, m, kprime, x, out);
    return;
  }
#endif
  (void)dim;
  detail::sp_scalar_f32(idx, vals, m, kprime, x, out);
}

void lcg(const uint32_t* idx, const double* vals, size_t kprime,
         const uint32_t* rows, const double* coeff, size_t nrows,
         const BlockLayout& layout, double* out) {
#ifdef EFCP_HAVE_AVX2_SOURCES
  if (g_backend.load() == Backend::Avx2 && fits_avx2(layout.dim, kprime)) {
    detail::lcg_avx2_f64(idx, vals, kprime, rows, coeff, nrows, layout, out);
    return;
  }
#endif
  detail::lcg_scalar_f64(idx, vals, kprime, rows, coeff, nrows, layout, out);
}

void lcg(const uint32_t* idx, const float* vals, size_t kprime,
         const uint32_t* rows, const double* coeff, size_t nrows,
         const BlockLayout& layout, double* out) {
#ifdef EFCP_HAVE_AVX2_SOURCES
  if (g_backend.load() == Backend::Avx2 && fits_avx2(layout.dim, kprime)) {
    detail::lcg_avx2_f32(idx, vals, kprime, rows, coeff, nrows, layout, out);
    return;
  }
#endif
  detail::lcg_scalar_f32(idx, vals, kprime, rows, coeff, nrows, layout, out);
}

}  // namespace efcp::kernels
