#pragma once

#include <stdexcept>
#include <string>

namespace hooktab {

// Base class for all domain errors. Annihilation of a crystal operator is
// *not* an error and is reported through std::optional instead.
class TableauError : public std::runtime_error {
public:
    explicit TableauError(const std::string& what) : std::runtime_error(what) {}
};

// A cell's filling is not a hook-shaped semistandard tableau.
class CellNotHookError : public TableauError {
public:
    using TableauError::TableauError;
};

// max(left) > min(right) for two horizontally adjacent cells.
class RowViolationError : public TableauError {
public:
    using TableauError::TableauError;
};

// max(below) >= min(above) for two vertically adjacent cells.
class ColumnViolationError : public TableauError {
public:
    using TableauError::TableauError;
};

// Cell data does not cover exactly the cells of the declared shape.
class ShapeMismatchError : public TableauError {
public:
    using TableauError::TableauError;
};

// Inner shape of a skew filling is not contained in the outer shape.
class ShapeNotNestedError : public TableauError {
public:
    using TableauError::TableauError;
};

// A map was called outside its stated domain (e.g. crowding bumping on a
// cell with two arm elements).
class PreconditionError : public TableauError {
public:
    using TableauError::TableauError;
};

// Raised by the crowding map the moment an intermediate tableau loses a
// letter; carries the position of the first weight drop.
class NotInKLambdaError : public TableauError {
public:
    NotInKLambdaError(int stage, int step, const std::string& what)
        : TableauError(what), stage(stage), step(step) {}

    int stage;  // index j of the crowding-order cell being processed
    int step;   // bump count s within that stage
};

}  // namespace hooktab
