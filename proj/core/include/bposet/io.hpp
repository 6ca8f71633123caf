#pragma once

#include <string>

#include "bposet/hecke.hpp"
#include "bposet/poset.hpp"
#include "bposet/qsym.hpp"

namespace bposet {

std::string read_text_file(const std::string& path);

// {"n": 2, "covers": [[-1,0],...], "symmetrize": false}; errors name the offending line.
BnPoset parse_poset_json(const std::string& text);
BnPoset load_poset_file(const std::string& path);
std::string poset_to_json(const BnPoset& P);
std::string hasse_dot(const BnPoset& P);

std::string module_to_json(const HeckeModule& M);
HeckeModule parse_module_json(const std::string& text);
std::string quiver_dot(const HeckeModule& M);

std::string qsym_to_json(const QSymBElement& f);
std::string qsym_to_json(const QSymElement& f);

}  // namespace bposet
