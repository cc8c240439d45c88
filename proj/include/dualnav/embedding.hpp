#pragma once

#include <array>
#include <string>
#include <vector>

namespace dualnav {

// Deterministic stand-in for a sentence encoder: hashed token features,
// identical across platforms. Tokens are lowercased alphanumeric runs with
// a fixed stopword list removed; each sentence additionally contributes a
// weighted "shape" feature (its sorted content-token set), which carries
// the within-sentence co-occurrence that plain unigrams lose — structured
// scene lines sharing vocabulary but differing in layout stay separable.
struct TextEmbedding {
  static constexpr int kDim = 256;
  std::array<double, kDim> v{};  // unit L2 norm
};

// Throws EmptyText when no token survives tokenization.
TextEmbedding embed_text(const std::string& text);

// Exposed for tests: content tokens per sentence after stopword removal.
std::vector<std::vector<std::string>> tokenize_sentences(const std::string& text);

double cosine(const TextEmbedding& a, const TextEmbedding& b);

}  // namespace dualnav
