#include "dualnav/embedding.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

#include "dualnav/errors.hpp"
#include "dualnav/rng.hpp"

namespace dualnav {

namespace {

constexpr double kShapeWeight = 3.0;

const std::set<std::string>& stopwords() {
  static const std::set<std::string> kStop = {
      "a",  "an",  "the",  "is",   "are", "was",  "were", "on",   "in",  "at",
      "of", "to",  "for",  "and",  "or",  "with", "there", "this", "that", "it",
      "its", "as", "be",   "been", "being", "side", "cam",  "text"};
  return kStop;
}

void accumulate(std::array<double, TextEmbedding::kDim>& acc, const std::string& token,
                double count) {
  const std::uint64_t h = fnv1a64(token);
  const int bucket = static_cast<int>(h % TextEmbedding::kDim);
  const double sign = (h >> 63) ? -1.0 : 1.0;
  acc[static_cast<std::size_t>(bucket)] += sign * count;
}

}  // namespace

std::vector<std::vector<std::string>> tokenize_sentences(const std::string& text) {
  std::vector<std::vector<std::string>> sentences;
  std::vector<std::string> current;
  std::string token;
  auto flush_token = [&] {
    if (!token.empty()) {
      if (stopwords().count(token) == 0) current.push_back(token);
      token.clear();
    }
  };
  auto flush_sentence = [&] {
    flush_token();
    if (!current.empty()) sentences.push_back(std::move(current));
    current.clear();
  };
  for (char raw : text) {
    const auto c = static_cast<unsigned char>(raw);
    if (std::isalnum(c)) {
      token.push_back(static_cast<char>(std::tolower(c)));
    } else if (raw == '.' || raw == ';' || raw == '!' || raw == '?' || raw == '\n') {
      flush_sentence();
    } else {
      flush_token();
    }
  }
  flush_sentence();
  return sentences;
}

TextEmbedding embed_text(const std::string& text) {
  const auto sentences = tokenize_sentences(text);

  TextEmbedding e;
  bool any = false;
  for (const auto& sent : sentences) {
    std::set<std::string> shape;
    for (const auto& tok : sent) {
      accumulate(e.v, tok, 1.0);
      shape.insert(tok);
      any = true;
    }
    if (!shape.empty()) {
      std::string key = "#";
      for (const auto& tok : shape) {
        key += tok;
        key += '|';
      }
      accumulate(e.v, key, kShapeWeight);
    }
  }
  if (!any) throw EmptyText("embed_text: no tokens in input");

  double norm2 = 0.0;
  for (double x : e.v) norm2 += x * x;
  // Opposite-sign collisions could zero the vector for adversarial inputs;
  // treat that like empty text.
  if (norm2 <= 0.0) throw EmptyText("embed_text: features cancelled to zero");
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& x : e.v) x *= inv;
  return e;
}

double cosine(const TextEmbedding& a, const TextEmbedding& b) {
  if (a.v == b.v) return 1.0;  // exact-match fast path, immune to rounding
  double dot = 0.0;
  for (int i = 0; i < TextEmbedding::kDim; ++i) dot += a.v[static_cast<std::size_t>(i)] * b.v[static_cast<std::size_t>(i)];
  return std::clamp(dot, -1.0, 1.0);
}

}  // namespace dualnav
