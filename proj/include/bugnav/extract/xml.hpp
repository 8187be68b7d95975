#pragma once

#include <optional>
#include <sstream>
#include <string>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "bugnav/log.hpp"

namespace bugnav::extract {

using XmlTree = boost::property_tree::ptree;

/// Parses an XML document; malformed input yields none and a warning.
inline std::optional<XmlTree> parse_xml(const std::string& path, const std::string& content) {
  std::istringstream in(content);
  XmlTree tree;
  try {
    boost::property_tree::read_xml(in, tree, boost::property_tree::xml_parser::no_comments);
  } catch (const boost::property_tree::xml_parser_error& e) {
    logger()->warn("skipping malformed XML {}: {}", path, e.message());
    return std::nullopt;
  }
  return tree;
}

inline std::optional<std::string> xml_attribute(const XmlTree& node, const std::string& name) {
  if (auto attrs = node.get_child_optional("<xmlattr>"))
    if (auto v = attrs->get_optional<std::string>(name)) return *v;
  return std::nullopt;
}

/// Depth-first visit of every element (not attributes or text nodes).
template <typename Visit>
void for_each_element(const XmlTree& node, Visit&& visit) {
  for (const auto& [tag, child] : node) {
    if (tag == "<xmlattr>" || tag == "<xmlcomment>" || tag == "<xmltext>") continue;
    visit(tag, child);
    for_each_element(child, visit);
  }
}

}  // namespace bugnav::extract
