#pragma once

#include "multiplex/catalog.hpp"
#include "multiplex/multiplet.hpp"

#include <string>
#include <vector>

namespace multiplex {

enum class OutputFormat { table, json, dot };

struct OutputDocument {
    OutputFormat format = OutputFormat::table;
    std::string body;
};

std::string render_table(const Multiplet& mult, const std::vector<Arrow>& arrows);
std::string render_json(const Multiplet& mult);
std::string render_dot(const Multiplet& mult, const std::vector<Arrow>& arrows);

/// Inverse of render_json; throws DomainError on schema violations.
Multiplet parse_json(const std::string& text);

std::string render_report(const VerifyReport& report);

} // namespace multiplex
