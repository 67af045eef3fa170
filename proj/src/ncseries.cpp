#include "polydist/ncseries.hpp"

namespace polydist {

bool quotient_keeps(Quotient q, const Word& w) {
  switch (q) {
    case Quotient::none:
      return true;
    case Quotient::iy:
      return w.y_count() < 2;
    case Quotient::jy:
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i].is_y()) return false;
      }
      return true;
  }
  return true;
}

AlgebraMorphism::AlgebraMorphism(Alphabet source, Alphabet target, std::size_t degree,
                                 std::vector<NCSeries<Rational>> images)
    : source_(source), target_(target), degree_(degree), images_(std::move(images)) {
  if (images_.size() != source_.letter_count()) {
    throw DomainError("morphism needs one image per source letter");
  }
  for (auto& img : images_) {
    if (img.alphabet() != target_) throw AlphabetMismatchError("letter image is not over the target alphabet");
    if (!img.constant_term().is_zero()) throw DomainError("letter images must have zero constant term");
    img = img.truncated(degree_);
  }
}

AlgebraMorphism AlgebraMorphism::identity(Alphabet alphabet, std::size_t degree) {
  std::vector<NCSeries<Rational>> images;
  for (std::uint16_t code = 0; code < alphabet.letter_count(); ++code) {
    images.push_back(NCSeries<Rational>::letter(alphabet, degree, Letter::from_code(code)));
  }
  return {alphabet, alphabet, degree, std::move(images)};
}

MorphismImageCache::MorphismImageCache(const AlgebraMorphism& phi, std::size_t degree, Quotient quotient)
    : phi_(phi), degree_(degree), quotient_(quotient) {}

const NCSeries<Rational>& MorphismImageCache::image(const Word& w) {
  const auto it = cache_.find(w);
  if (it != cache_.end()) return it->second;
  NCSeries<Rational> result;
  if (w.empty()) {
    result = NCSeries<Rational>::one(phi_.target(), degree_).modulo(quotient_);
  } else {
    Word prefix(w.alphabet(), std::vector<Letter>(w.letters().begin(), w.letters().end() - 1));
    const NCSeries<Rational>& head = image(prefix);
    result = head * phi_.image(w.letters().back()).truncated(degree_).modulo(quotient_);
  }
  return cache_.emplace(w, std::move(result)).first->second;
}

AlgebraMorphism compose(const AlgebraMorphism& outer, const AlgebraMorphism& inner) {
  if (inner.target() != outer.source()) throw AlphabetMismatchError("morphisms are not composable");
  const std::size_t degree = std::min(outer.degree(), inner.degree());
  std::vector<NCSeries<Rational>> images;
  images.reserve(inner.images().size());
  for (const auto& img : inner.images()) images.push_back(apply_morphism(outer, img.truncated(degree)));
  return {inner.source(), outer.target(), degree, std::move(images)};
}

}  // namespace polydist
