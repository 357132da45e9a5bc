#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <stdexcept>

namespace homquiver {

// Finite Weyl group with length, Bruhat order and Lusztig a-function data.
// Supported types: A1..A5 (symmetric groups via one-line permutations) and the
// rank-2 dihedral types A1xA1, B2, G2.
struct WeylGroup {
    std::string type;
    int order = 0;
    int num_gens = 0;
    int id = 0;   // element index of the identity
    int w0 = 0;   // longest element
    std::vector<int> length;
    std::vector<std::vector<bool>> bruhat_leq;  // [u][w] : u <= w
    std::vector<std::vector<int>> mult;         // group law, mult[u][w] = u*w
    std::vector<int> inverse;
    std::vector<int> gens;          // element index of each simple reflection
    std::vector<int> a_value;       // Lusztig a-function
    std::vector<std::vector<int>> perms;  // one-line forms (type A only)
    int dim_g = 0, dim_h = 0, num_positive_roots = 0;

    int element_of_word(const std::vector<int>& gen_word) const;
    std::string word_name(int elem) const;  // a shortest word, "e" for identity
};

WeylGroup build_weyl_group(const std::string& type);

// Exposed for cross-checking the two constructions of rank-2 groups.
WeylGroup build_dihedral_group(int m, const std::string& type_name);

// All up-closed subsets of the Bruhat order, as bitmasks; requires |W| <= 24.
std::vector<uint32_t> coideals(const WeylGroup& w);

// Longest element of the standard parabolic subgroup generated by the listed
// simple reflections.
int longest_parabolic_element(const WeylGroup& w, const std::vector<int>& gen_subset);

// Closed-form homological invariants of a block with stabilizer parabolic J:
// (pd of the simple Verma module, global dimension, pd of the dominant simple)
// = (a(w0 w0^J), 2 a(w0 w0^J), 2 a(w0 w0^J)).
struct BlockInvariants {
    int pd_simple_verma = 0;
    int global_dimension = 0;
    int pd_dominant_simple = 0;
};
BlockInvariants singular_block_invariants(const WeylGroup& w, const std::vector<int>& parabolic);

// Regular-block projective dimension of the simple indexed by w: 2 l(w0) - l(w).
int regular_block_pd_simple(const WeylGroup& w, int elem);

// Projective dimensions inside the thick category built over the same block.
struct ThickCategoryPd {
    int pd_simple = 0;        // dim g - l(w)
    int pd_verma = 0;         // dim h + l(w)
    std::optional<int> shifted_pd;  // dim h + base_pd when a base value is supplied
    int global_dimension = 0; // dim g
    int min_pd = 0;           // dim h
};
ThickCategoryPd thick_category_pd(const WeylGroup& w, int elem,
                                  std::optional<int> base_pd = std::nullopt);

// Parses "e", "s1", "s2s1s2" into an element index.
int parse_element(const WeylGroup& w, const std::string& word);
std::vector<int> parse_generator_set(const WeylGroup& w, const std::string& text);

}  // namespace homquiver
