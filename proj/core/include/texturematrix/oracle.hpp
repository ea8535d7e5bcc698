#pragma once

#include "texturematrix/glcm.hpp"

namespace texturematrix {

/// Reference construction for testing: a literal loop over every pixel and
/// every bounds-checked neighbor. Shares no code with directional_glcm.
CooccurrenceMatrix oracle_glcm(const PixelGrid& image, Direction direction);

/// Two literal directional builds added cell by cell.
CooccurrenceMatrix oracle_symmetric_glcm(const PixelGrid& image, SymmetricAxis axis);

}  // namespace texturematrix
