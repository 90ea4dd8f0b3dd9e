#pragma once

#include "a1mod/functors.hpp"
#include "a1mod/hilbert.hpp"
#include "a1mod/margolis.hpp"
#include "a1mod/picard.hpp"

#include <json.hpp>

#include <map>
#include <string>

namespace a1mod {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/* optional header recording how a file was produced */
using Provenance = std::map<std::string, std::string>;

struct ModuleFile
{
    GradedModule module;
    Provenance provenance;
};

/*
 * Actions are stored per generator and degree as images of basis elements:
 * row i of the matrix for degree d is the image of basis element i of degree d
 * in the basis of degree d + |g|.
 */
Json module_to_json(const GradedModule& m, const Provenance& p = {});
ModuleFile module_from_json(const Json& j);

std::string write_module(const GradedModule& m, const Provenance& p = {});
ModuleFile read_module(const std::string& text);
ModuleFile read_module_file(const std::string& path);

/* one node per basis element, Sq1 straight, Sq2 dashed and labelled */
std::string to_dot(const GradedModule& m, const std::string& name = "M");
/* dots per degree, 'o' for module generators and '*' otherwise, then the edge lists */
std::string to_ascii(const GradedModule& m);

Json to_json(const MargolisHomology& h);
Json to_json(const PicClass& c);
Json to_json(const TruncatedSeries& s);
Json to_json(const Resolution& r);
Json to_json(const SplitResult& s);

}  // namespace a1mod
