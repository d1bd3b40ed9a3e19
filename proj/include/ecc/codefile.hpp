#ifndef ECC_CODEFILE_HPP
#define ECC_CODEFILE_HPP

#include <string>

#include "ecc/block.hpp"
#include "ecc/conv.hpp"

namespace ecc {

/*
 * Text format, one record per line:
 *
 *   GF <p> <s> [<c_0> ... <c_s>]
 *   OMEGA <element>
 *   CODE <n> <r> <d> <TYPE> FIELD <p> <s>          (block codes)
 *   CONV <n> <r> <delta> <mu> <d_f|-> FIELD <p> <s> (convolutional codes)
 *   ...index and flag lines...
 *   BLOCK <label>
 *   MATRIX <rows> <cols>
 *   <rows lines of space-separated elements>
 */

std::string format_vector(const Field& f, std::span<const FieldElement> v);
Vector parse_vector(const Field& f, const std::string& line);
std::string format_matrix(const Field& f, const Matrix& m);

/// `CODE n r d TYPE FIELD p s`
std::string summary_line(const BlockCode& code);
std::string summary_line(const ConvCode& code);

std::string serialize(const BlockCode& code);
std::string serialize(const ConvCode& code);

enum class FileKind { Block, Conv };
FileKind detect_kind(const std::string& text);

BlockCode parse_block(const std::string& text);
ConvCode parse_conv(const std::string& text);

bool same_code(const BlockCode& a, const BlockCode& b);
bool same_code(const ConvCode& a, const ConvCode& b);

}  // namespace ecc

#endif  // ECC_CODEFILE_HPP
