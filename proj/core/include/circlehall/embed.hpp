#pragma once

#include "circlehall/hall.hpp"

namespace circlehall {

enum class EmbedSource { Subdivision, PlusInfinity, TwoSided, Successor };

EmbedSource embed_source_from_string(const std::string& s);

struct EmbedImage {
  int index = 0;        // Chevalley index 1..n at the source level
  Arc e_image;          // image interval of the E generator / simple
  Arc k_image;          // image interval of the K generator
};

// Generator images of the level-n algebra inside the limit algebra.
//  - subdivision: level n -> level k*n, intervals unchanged as subsets
//  - plus-infinity / two-sided: the dyadic-endpoint interval families
//  - successor: level n -> level n+1 (S_n maps to the length-2 segment
//    ending at 0, other simples are fixed)
std::vector<EmbedImage> embed_generators(EmbedSource source, long long n, long long target = 0);

// Symmetric Euler form matrix of the image intervals; for every source the
// full set reproduces the affine Cartan matrix of the source level, and the
// non-affine nodes the finite type-A pattern.
std::vector<std::vector<long long>> embed_cartan_matrix(const std::vector<EmbedImage>& images);
bool is_affine_type_a_cartan(const std::vector<std::vector<long long>>& m);

// Object-level successor functor: substitutes the wrap vertex chain.
TorsionObject successor_image(const TorsionObject& m, long long n);

}  // namespace circlehall
