#pragma once

// Codepoint constants and character classes shared by the text and
// morphology code.

namespace cbas::arabic {

inline constexpr char32_t kHamza = U'ء';
inline constexpr char32_t kAlefMadda = U'آ';
inline constexpr char32_t kAlefHamzaAbove = U'أ';
inline constexpr char32_t kAlefHamzaBelow = U'إ';
inline constexpr char32_t kAlef = U'ا';
inline constexpr char32_t kWawHamza = U'ؤ';
inline constexpr char32_t kYehHamza = U'ئ';
inline constexpr char32_t kTehMarbuta = U'ة';
inline constexpr char32_t kTatweel = 0x0640;
inline constexpr char32_t kWaw = U'و';
inline constexpr char32_t kAlefMaksura = U'ى';
inline constexpr char32_t kYeh = U'ي';

constexpr bool is_diacritic(char32_t c) { return c >= 0x064B && c <= 0x0652; }

/// Letters of the basic Arabic block plus the extended letters used by
/// Persian/Urdu orthography.
constexpr bool is_letter(char32_t c) {
  return (c >= 0x0621 && c <= 0x063A) || (c >= 0x0641 && c <= 0x064A) ||
         (c >= 0x0671 && c <= 0x06D3);
}

/// ا, و, ي
constexpr bool is_weak(char32_t c) { return c == kAlef || c == kWaw || c == kYeh; }

/// Letters left untouched by normalization that still carry a hamza.
constexpr bool is_hamza_seat(char32_t c) { return c == kHamza || c == kWawHamza || c == kYehHamza; }

constexpr bool is_digit(char32_t c) {
  return (c >= U'0' && c <= U'9') || (c >= 0x0660 && c <= 0x0669) ||
         (c >= 0x06F0 && c <= 0x06F9);
}

constexpr bool is_space(char32_t c) {
  return c == 0x20 || (c >= 0x09 && c <= 0x0D) || c == 0x85 || c == 0xA0 || c == 0x1680 ||
         (c >= 0x2000 && c <= 0x200B) || c == 0x2028 || c == 0x2029 || c == 0x202F ||
         c == 0x205F || c == 0x3000 || c == 0xFEFF;
}

constexpr bool is_punctuation(char32_t c) {
  if (c < 0x80) {
    return (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) || (c >= 0x5B && c <= 0x60) ||
           (c >= 0x7B && c <= 0x7E);
  }
  switch (c) {
    case 0x00A1: case 0x00AB: case 0x00B7: case 0x00BB: case 0x00BF:
    case 0x060C: case 0x060D: case 0x061B: case 0x061E: case 0x061F:
    case 0x066A: case 0x066B: case 0x066C: case 0x066D: case 0x06D4:
    case 0xFD3E: case 0xFD3F:
      return true;
    default:
      break;
  }
  return (c >= 0x2010 && c <= 0x2027) || (c >= 0x2030 && c <= 0x205E) ||
         (c >= 0x3001 && c <= 0x3003);
}

}  // namespace cbas::arabic
