// Normalization constants calibrated once against oscillatory_oracle and
// frozen; fixtures/normalization.json records the same values.
#ifndef GAMMALIFT_NORMALIZATION_HPP
#define GAMMALIFT_NORMALIZATION_HPP

namespace gammalift {

// gamma of a conductor-1 character is g(chi) z^-1 q^(s + this).
inline constexpr int kTateEpsNormalization = -1;

// The Mellin-side inversion is z -> q^(this * sigma) z^-1.
inline constexpr int kFourierShiftExponent = -1;

} // namespace gammalift

#endif
