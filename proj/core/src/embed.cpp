#include "circlehall/embed.hpp"

#include <algorithm>

namespace circlehall {

EmbedSource embed_source_from_string(const std::string& s) {
  if (s == "subdivision" || s == "affine-n-subdivision") return EmbedSource::Subdivision;
  if (s == "plus-infinity") return EmbedSource::PlusInfinity;
  if (s == "two-sided") return EmbedSource::TwoSided;
  if (s == "successor") return EmbedSource::Successor;
  throw parse_error("unknown embedding source: " + s);
}

namespace {

// alpha_k = 1 - 1/2^{k+1} for k >= 0, 1/2^{-k+1} for k <= 0.
Rat alpha(long long k) {
  if (k >= 0) {
    Int den = Int(1) << static_cast<unsigned>(k + 1);
    return Rat(1) - Rat(Int(1), den);
  }
  Int den = Int(1) << static_cast<unsigned>(-k + 1);
  return Rat(Int(1), den);
}

}  // namespace

std::vector<EmbedImage> embed_generators(EmbedSource source, long long n, long long target) {
  if (n < 2) throw precondition_error("embedding source level must be >= 2");
  std::vector<EmbedImage> out;
  switch (source) {
    case EmbedSource::Subdivision: {
      if (target == 0 || target % n != 0)
        throw precondition_error("subdivision target must be a multiple of n");
      for (long long i = 1; i <= n; ++i) {
        EmbedImage im;
        im.index = static_cast<int>(i);
        im.e_image = Arc(CirclePoint(Rat(i, n)), Rat(1, n));
        im.k_image = im.e_image;
        out.push_back(im);
      }
      return out;
    }
    case EmbedSource::PlusInfinity: {
      for (long long i = 1; i < n; ++i) {
        EmbedImage im;
        im.index = static_cast<int>(i);
        im.e_image = Arc::interval(alpha(i - 1), alpha(i));
        im.k_image = im.e_image;
        out.push_back(im);
      }
      EmbedImage last;
      last.index = static_cast<int>(n);
      last.e_image = Arc::interval(alpha(n - 1), Rat(1, 2));  // wraps through 0
      last.k_image = last.e_image;
      out.push_back(last);
      return out;
    }
    case EmbedSource::TwoSided: {
      long long m = -(n / 2);
      for (long long i = 1; i < n; ++i) {
        EmbedImage im;
        im.index = static_cast<int>(i);
        im.e_image = Arc::interval(alpha(m + i), alpha(m + i + 1));
        im.k_image = im.e_image;
        out.push_back(im);
      }
      EmbedImage last;
      last.index = static_cast<int>(n);
      long long top = n / 2 + (n % 2);  // floor(n/2) + 2{n/2}
      last.e_image = Arc::interval(alpha(top), alpha(m + 1));
      last.k_image = last.e_image;
      out.push_back(last);
      return out;
    }
    case EmbedSource::Successor: {
      for (long long i = 1; i < n; ++i) {
        EmbedImage im;
        im.index = static_cast<int>(i);
        im.e_image = Arc(CirclePoint(Rat(i, n + 1)), Rat(1, n + 1));
        im.k_image = im.e_image;
        out.push_back(im);
      }
      EmbedImage last;
      last.index = static_cast<int>(n);
      last.e_image = Arc(CirclePoint(Rat(0)), Rat(2, n + 1));  // the length-2 segment at 0
      last.k_image = last.e_image;
      out.push_back(last);
      return out;
    }
  }
  throw precondition_error("unhandled source");
}

std::vector<std::vector<long long>> embed_cartan_matrix(const std::vector<EmbedImage>& images) {
  size_t k = images.size();
  std::vector<std::vector<long long>> m(k, std::vector<long long>(k, 0));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      m[i][j] = symmetric_interval_euler_form(StepFunction::indicator(images[i].e_image),
                                              StepFunction::indicator(images[j].e_image));
  return m;
}

bool is_affine_type_a_cartan(const std::vector<std::vector<long long>>& m) {
  size_t k = m.size();
  if (k < 2) return false;
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      long long expect;
      if (i == j)
        expect = 2;
      else {
        int adj = 0;
        if ((i + 1) % k == j) ++adj;
        if ((j + 1) % k == i) ++adj;
        expect = -adj;
      }
      if (m[i][j] != expect) return false;
    }
  return true;
}

TorsionObject successor_image(const TorsionObject& m, long long n) {
  std::vector<Arc> out;
  for (const auto& arc : m.arcs()) {
    Rat rn = arc.right.value() * n;
    if (rat_den(rn) != 1 || rat_den(arc.len * n) != 1)
      throw precondition_error("object not at level n");
    long long s = to_ll(rat_num(rn));  // socle vertex index, i/n with i in 1..n
    if (s == 0) s = n;
    long long j = to_ll(rat_num(arc.len * n));
    // Descending vertex chain from the socle, substituting n -> (n+1, n).
    std::vector<long long> chain;
    for (long long t = 0; t < j; ++t) {
      long long v = ((s - t - 1) % n + n) % n + 1;
      if (v == n) {
        chain.push_back(n + 1);
        chain.push_back(n);
      } else {
        chain.push_back(v);
      }
    }
    long long new_socle = chain.front();
    long long new_len = static_cast<long long>(chain.size());
    out.emplace_back(CirclePoint(Rat(new_socle, n + 1)), Rat(new_len, n + 1));
  }
  return TorsionObject(std::move(out));
}

}  // namespace circlehall
