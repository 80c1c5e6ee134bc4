#pragma once

#include <string>
#include <string_view>

#include "anyon/model.hpp"

namespace anyon {

class SchemaError : public ModelError {
 public:
  using ModelError::ModelError;
};

// Structural parse only; run validate() afterwards.
AnyonModel parse_model(std::string_view document);
std::string serialize_model(const AnyonModel& model);

// Built-in spec or path to a JSON model file. Throws SchemaError or std::runtime_error (I/O).
AnyonModel load_model(const std::string& source);

bool models_equal(const AnyonModel& a, const AnyonModel& b);

}  // namespace anyon
