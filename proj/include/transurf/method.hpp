#pragma once

#include <optional>
#include <string_view>

namespace transurf {

/// Elimination path. automatic picks one from the span dimensions of the
/// generating curves.
enum class Method { automatic, general, ruled, planar };

std::string_view method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

} // namespace transurf
