#pragma once

#include <string>

#include "osdom/graph.hpp"
#include "osdom/poset.hpp"
#include "osdom/set_family.hpp"
#include "osdom/transforms.hpp"

namespace osdom {

// Codecs for the on-disk formats. Reading tolerates '#' comments and blank
// lines; writing emits the canonical form, so write(read(f)) is the
// whitespace/comment-normalized identity.

/// `poset <n>`, optional `labels ...`, then `cover <a> <b>` lines
/// (0-based, shortcut pairs allowed).
Poset read_poset(const std::string& text);
std::string write_poset(const Poset& p);

/// DIMACS-like: `p edge <n> <m>` then `e <u> <v>` (1-based). Optional
/// `l <u> <label>` lines carry labels.
Graph read_graph(const std::string& text);
std::string write_graph(const Graph& g);

/// Graph format plus one `s <u> {L|R}` line per vertex.
BipartiteGraph read_bipartite(const std::string& text);
std::string write_bipartite(const BipartiteGraph& b);

/// `family <ground-size> <member-count>` then one line of indices per member.
SetFamily read_family(const std::string& text);
std::string write_family(const SetFamily& f);

std::string write_trace(const Trace& t);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// Grammar of every format, for the `formats` verb.
std::string format_grammar();

}  // namespace osdom
