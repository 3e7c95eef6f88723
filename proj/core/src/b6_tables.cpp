#include "b6_tables.hpp"

namespace d6::detail {

// clang-format off
const std::array<std::vector<Inequality>, 14>& e_blocks() {
  static const std::array<std::vector<Inequality>, 14> blocks = {{
    {
      {{{-1,1,3},{-1,1,4},{-1,1,5},{1,2,2}}, true, {{1,5,5}}},
      {{{-1,1,3},{-1,1,4},{-1,1,5},{1,2,2}}, true, {{-1,1,3},{-1,2,3},{1,4,4},{1,4,5}}},
      {{{-1,1,3},{-1,1,4},{-1,1,5},{1,2,2}}, true, {{-1,1,3},{-1,3,4},{1,4,4},{1,4,5}}},
      {{{-1,1,3},{-1,1,4},{-1,1,5},{1,2,2}}, true, {{-1,1,3},{1,4,4}}},
      {{{-1,1,3},{-1,1,4},{-1,1,5},{1,2,2}}, true, {{-1,2,4},{-1,3,4},{1,4,4},{1,4,5}}},
      {{{-1,1,3},{-1,1,4},{-1,1,5},{1,2,2}}, true, {{-1,2,4},{1,4,4}}},
      {{{-1,1,3},{-1,1,4},{-1,1,5},{1,2,2}}, true, {{-1,3,5},{1,4,4}}},
      {{{-1,1,3},{-1,1,4},{-1,1,5},{1,2,2}}, true, {{-1,1,3},{-1,1,4},{-1,2,3},{-1,2,4},{1,3,3},{1,3,4},{1,3,5}}},
      {{{-1,1,3},{-1,1,4},{-1,1,5},{1,2,2}}, true, {{-1,1,3},{-1,1,4},{-1,2,3},{1,3,3},{1,3,4}}},
      {{{-1,1,3},{-1,1,4},{-1,1,5},{1,2,2}}, true, {{-1,1,3},{-1,2,3},{-1,2,5},{1,3,3},{1,3,4}}},
      {{{-1,1,3},{-1,1,4},{-1,1,5},{1,2,2}}, true, {{-1,1,3},{-1,1,4},{1,3,3}}},
      {{{-1,1,3},{-1,1,4},{-1,1,5},{1,2,2}}, true, {{-1,1,3},{-1,2,5},{1,3,3}}},
      {{{-1,1,3},{-1,1,4},{-1,1,5},{1,2,2}}, true, {{-1,2,4},{-1,2,5},{1,3,3}}}},
    {
      {{{-1,1,3},{-1,1,4},{-1,2,3},{-1,2,4},{1,3,3},{1,3,4},{1,3,5}}, true, {{1,5,5}}},
      {{{-1,1,3},{-1,1,4},{-1,2,3},{-1,2,4},{1,3,3},{1,3,4},{1,3,5}}, true, {{-1,1,3},{-1,2,3},{1,4,4},{1,4,5}}},
      {{{-1,1,3},{-1,1,4},{-1,2,3},{-1,2,4},{1,3,3},{1,3,4},{1,3,5}}, true, {{-1,1,3},{-1,3,4},{1,4,4},{1,4,5}}},
      {{{-1,1,3},{-1,1,4},{-1,2,3},{-1,2,4},{1,3,3},{1,3,4},{1,3,5}}, true, {{-1,1,3},{1,4,4}}},
      {{{-1,1,3},{-1,1,4},{-1,2,3},{-1,2,4},{1,3,3},{1,3,4},{1,3,5}}, true, {{-1,2,4},{-1,3,4},{1,4,4},{1,4,5}}},
      {{{-1,1,3},{-1,1,4},{-1,2,3},{-1,2,4},{1,3,3},{1,3,4},{1,3,5}}, true, {{-1,2,4},{1,4,4}}},
      {{{-1,1,3},{-1,1,4},{-1,2,3},{-1,2,4},{1,3,3},{1,3,4},{1,3,5}}, true, {{-1,3,5},{1,4,4}}},
      {{{-1,1,3},{-1,1,4},{-1,2,3},{-1,2,4},{1,3,3},{1,3,4},{1,3,5}}, false, {{-1,1,3},{-1,1,4},{-1,1,5},{1,2,2}}},
      {{{-1,1,3},{-1,1,4},{-1,2,3},{-1,2,4},{1,3,3},{1,3,4},{1,3,5}}, true, {{-1,1,3},{-1,1,4},{-1,2,3},{1,3,3},{1,3,4}}},
      {{{-1,1,3},{-1,1,4},{-1,2,3},{-1,2,4},{1,3,3},{1,3,4},{1,3,5}}, true, {{-1,1,3},{-1,2,3},{-1,2,5},{1,3,3},{1,3,4}}},
      {{{-1,1,3},{-1,1,4},{-1,2,3},{-1,2,4},{1,3,3},{1,3,4},{1,3,5}}, true, {{-1,1,3},{-1,1,4},{1,3,3}}},
      {{{-1,1,3},{-1,1,4},{-1,2,3},{-1,2,4},{1,3,3},{1,3,4},{1,3,5}}, true, {{-1,1,3},{-1,2,5},{1,3,3}}},
      {{{-1,1,3},{-1,1,4},{-1,2,3},{-1,2,4},{1,3,3},{1,3,4},{1,3,5}}, true, {{-1,2,4},{-1,2,5},{1,3,3}}}},
    {
      {{{-1,1,3},{-1,1,4},{-1,2,3},{1,3,3},{1,3,4}}, true, {{1,5,5}}},
      {{{-1,1,3},{-1,1,4},{-1,2,3},{1,3,3},{1,3,4}}, true, {{-1,1,3},{-1,2,3},{1,4,4},{1,4,5}}},
      {{{-1,1,3},{-1,1,4},{-1,2,3},{1,3,3},{1,3,4}}, true, {{-1,1,3},{-1,3,4},{1,4,4},{1,4,5}}},
      {{{-1,1,3},{-1,1,4},{-1,2,3},{1,3,3},{1,3,4}}, true, {{-1,1,3},{1,4,4}}},
      {{{-1,1,3},{-1,1,4},{-1,2,3},{1,3,3},{1,3,4}}, true, {{-1,2,4},{-1,3,4},{1,4,4},{1,4,5}}},
      {{{-1,1,3},{-1,1,4},{-1,2,3},{1,3,3},{1,3,4}}, true, {{-1,2,4},{1,4,4}}},
      {{{-1,1,3},{-1,1,4},{-1,2,3},{1,3,3},{1,3,4}}, true, {{-1,3,5},{1,4,4}}},
      {{{-1,1,3},{-1,1,4},{-1,2,3},{1,3,3},{1,3,4}}, false, {{-1,1,3},{-1,1,4},{-1,1,5},{1,2,2}}},
      {{{-1,1,3},{-1,1,4},{-1,2,3},{1,3,3},{1,3,4}}, false, {{-1,1,3},{-1,1,4},{-1,2,3},{-1,2,4},{1,3,3},{1,3,4},{1,3,5}}},
      {{{-1,1,3},{-1,1,4},{-1,2,3},{1,3,3},{1,3,4}}, true, {{-1,1,3},{-1,2,3},{-1,2,5},{1,3,3},{1,3,4}}},
      {{{-1,1,3},{-1,1,4},{-1,2,3},{1,3,3},{1,3,4}}, true, {{-1,1,3},{-1,1,4},{1,3,3}}},
      {{{-1,1,3},{-1,1,4},{-1,2,3},{1,3,3},{1,3,4}}, true, {{-1,1,3},{-1,2,5},{1,3,3}}},
      {{{-1,1,3},{-1,1,4},{-1,2,3},{1,3,3},{1,3,4}}, true, {{-1,2,4},{-1,2,5},{1,3,3}}}},
    {
      {{{-1,1,3},{-1,2,3},{-1,2,5},{1,3,3},{1,3,4}}, true, {{1,5,5}}},
      {{{-1,1,3},{-1,2,3},{-1,2,5},{1,3,3},{1,3,4}}, true, {{-1,1,3},{-1,2,3},{1,4,4},{1,4,5}}},
      {{{-1,1,3},{-1,2,3},{-1,2,5},{1,3,3},{1,3,4}}, true, {{-1,1,3},{-1,3,4},{1,4,4},{1,4,5}}},
      {{{-1,1,3},{-1,2,3},{-1,2,5},{1,3,3},{1,3,4}}, true, {{-1,1,3},{1,4,4}}},
      {{{-1,1,3},{-1,2,3},{-1,2,5},{1,3,3},{1,3,4}}, true, {{-1,2,4},{-1,3,4},{1,4,4},{1,4,5}}},
      {{{-1,1,3},{-1,2,3},{-1,2,5},{1,3,3},{1,3,4}}, true, {{-1,2,4},{1,4,4}}},
      {{{-1,1,3},{-1,2,3},{-1,2,5},{1,3,3},{1,3,4}}, true, {{-1,3,5},{1,4,4}}},
      {{{-1,1,3},{-1,2,3},{-1,2,5},{1,3,3},{1,3,4}}, false, {{-1,1,3},{-1,1,4},{-1,1,5},{1,2,2}}},
      {{{-1,1,3},{-1,2,3},{-1,2,5},{1,3,3},{1,3,4}}, false, {{-1,1,3},{-1,1,4},{-1,2,3},{-1,2,4},{1,3,3},{1,3,4},{1,3,5}}},
      {{{-1,1,3},{-1,2,3},{-1,2,5},{1,3,3},{1,3,4}}, false, {{-1,1,3},{-1,1,4},{-1,2,3},{1,3,3},{1,3,4}}},
      {{{-1,1,3},{-1,2,3},{-1,2,5},{1,3,3},{1,3,4}}, true, {{-1,1,3},{-1,1,4},{1,3,3}}},
      {{{-1,1,3},{-1,2,3},{-1,2,5},{1,3,3},{1,3,4}}, true, {{-1,1,3},{-1,2,5},{1,3,3}}},
      {{{-1,1,3},{-1,2,3},{-1,2,5},{1,3,3},{1,3,4}}, true, {{-1,2,4},{-1,2,5},{1,3,3}}}},
    {
      {{{-1,1,3},{-1,1,4},{1,3,3}}, true, {{1,5,5}}},
      {{{-1,1,3},{-1,1,4},{1,3,3}}, true, {{-1,1,3},{-1,2,3},{1,4,4},{1,4,5}}},
      {{{-1,1,3},{-1,1,4},{1,3,3}}, true, {{-1,1,3},{-1,3,4},{1,4,4},{1,4,5}}},
      {{{-1,1,3},{-1,1,4},{1,3,3}}, true, {{-1,1,3},{1,4,4}}},
      {{{-1,1,3},{-1,1,4},{1,3,3}}, true, {{-1,2,4},{-1,3,4},{1,4,4},{1,4,5}}},
      {{{-1,1,3},{-1,1,4},{1,3,3}}, true, {{-1,2,4},{1,4,4}}},
      {{{-1,1,3},{-1,1,4},{1,3,3}}, true, {{-1,3,5},{1,4,4}}},
      {{{-1,1,3},{-1,1,4},{1,3,3}}, false, {{-1,1,3},{-1,1,4},{-1,1,5},{1,2,2}}},
      {{{-1,1,3},{-1,1,4},{1,3,3}}, false, {{-1,1,3},{-1,1,4},{-1,2,3},{-1,2,4},{1,3,3},{1,3,4},{1,3,5}}},
      {{{-1,1,3},{-1,1,4},{1,3,3}}, false, {{-1,1,3},{-1,1,4},{-1,2,3},{1,3,3},{1,3,4}}},
      {{{-1,1,3},{-1,1,4},{1,3,3}}, true, {{-1,1,3},{-1,2,3},{-1,2,5},{1,3,3},{1,3,4}}},
      {{{-1,1,3},{-1,1,4},{1,3,3}}, true, {{-1,1,3},{-1,2,5},{1,3,3}}},
      {{{-1,1,3},{-1,1,4},{1,3,3}}, true, {{-1,2,4},{-1,2,5},{1,3,3}}}},
    {
      {{{-1,1,3},{-1,2,3},{1,4,4},{1,4,5}}, true, {{1,5,5}}},
      {{{-1,1,3},{-1,2,3},{1,4,4},{1,4,5}}, true, {{-1,1,3},{-1,3,4},{1,4,4},{1,4,5}}},
      {{{-1,1,3},{-1,2,3},{1,4,4},{1,4,5}}, true, {{-1,1,3},{1,4,4}}},
      {{{-1,1,3},{-1,2,3},{1,4,4},{1,4,5}}, true, {{-1,2,4},{-1,3,4},{1,4,4},{1,4,5}}},
      {{{-1,1,3},{-1,2,3},{1,4,4},{1,4,5}}, true, {{-1,2,4},{1,4,4}}},
      {{{-1,1,3},{-1,2,3},{1,4,4},{1,4,5}}, true, {{-1,3,5},{1,4,4}}},
      {{{-1,1,3},{-1,2,3},{1,4,4},{1,4,5}}, false, {{-1,1,3},{-1,1,4},{-1,1,5},{1,2,2}}},
      {{{-1,1,3},{-1,2,3},{1,4,4},{1,4,5}}, false, {{-1,1,3},{-1,1,4},{-1,2,3},{-1,2,4},{1,3,3},{1,3,4},{1,3,5}}},
      {{{-1,1,3},{-1,2,3},{1,4,4},{1,4,5}}, false, {{-1,1,3},{-1,1,4},{-1,2,3},{1,3,3},{1,3,4}}},
      {{{-1,1,3},{-1,2,3},{1,4,4},{1,4,5}}, false, {{-1,1,3},{-1,2,3},{-1,2,5},{1,3,3},{1,3,4}}},
      {{{-1,1,3},{-1,2,3},{1,4,4},{1,4,5}}, true, {{-1,1,3},{-1,1,4},{1,3,3}}},
      {{{-1,1,3},{-1,2,3},{1,4,4},{1,4,5}}, true, {{-1,1,3},{-1,2,5},{1,3,3}}},
      {{{-1,1,3},{-1,2,3},{1,4,4},{1,4,5}}, true, {{-1,2,4},{-1,2,5},{1,3,3}}}},
    {
      {{{-1,1,3},{-1,2,5},{1,3,3}}, true, {{1,5,5}}},
      {{{-1,1,3},{-1,2,5},{1,3,3}}, true, {{-1,1,3},{-1,2,3},{1,4,4},{1,4,5}}},
      {{{-1,1,3},{-1,2,5},{1,3,3}}, true, {{-1,1,3},{-1,3,4},{1,4,4},{1,4,5}}},
      {{{-1,1,3},{-1,2,5},{1,3,3}}, true, {{-1,1,3},{1,4,4}}},
      {{{-1,1,3},{-1,2,5},{1,3,3}}, true, {{-1,2,4},{-1,3,4},{1,4,4},{1,4,5}}},
      {{{-1,1,3},{-1,2,5},{1,3,3}}, true, {{-1,2,4},{1,4,4}}},
      {{{-1,1,3},{-1,2,5},{1,3,3}}, true, {{-1,3,5},{1,4,4}}},
      {{{-1,1,3},{-1,2,5},{1,3,3}}, false, {{-1,1,3},{-1,1,4},{-1,1,5},{1,2,2}}},
      {{{-1,1,3},{-1,2,5},{1,3,3}}, false, {{-1,1,3},{-1,1,4},{-1,2,3},{-1,2,4},{1,3,3},{1,3,4},{1,3,5}}},
      {{{-1,1,3},{-1,2,5},{1,3,3}}, false, {{-1,1,3},{-1,1,4},{-1,2,3},{1,3,3},{1,3,4}}},
      {{{-1,1,3},{-1,2,5},{1,3,3}}, false, {{-1,1,3},{-1,2,3},{-1,2,5},{1,3,3},{1,3,4}}},
      {{{-1,1,3},{-1,2,5},{1,3,3}}, false, {{-1,1,3},{-1,1,4},{1,3,3}}},
      {{{-1,1,3},{-1,2,5},{1,3,3}}, true, {{-1,2,4},{-1,2,5},{1,3,3}}}},
    {
      {{{-1,2,4},{-1,2,5},{1,3,3}}, true, {{1,5,5}}},
      {{{-1,2,4},{-1,2,5},{1,3,3}}, true, {{-1,1,3},{-1,2,3},{1,4,4},{1,4,5}}},
      {{{-1,2,4},{-1,2,5},{1,3,3}}, true, {{-1,1,3},{-1,3,4},{1,4,4},{1,4,5}}},
      {{{-1,2,4},{-1,2,5},{1,3,3}}, true, {{-1,1,3},{1,4,4}}},
      {{{-1,2,4},{-1,2,5},{1,3,3}}, true, {{-1,2,4},{-1,3,4},{1,4,4},{1,4,5}}},
      {{{-1,2,4},{-1,2,5},{1,3,3}}, true, {{-1,2,4},{1,4,4}}},
      {{{-1,2,4},{-1,2,5},{1,3,3}}, true, {{-1,3,5},{1,4,4}}},
      {{{-1,2,4},{-1,2,5},{1,3,3}}, false, {{-1,1,3},{-1,1,4},{-1,1,5},{1,2,2}}},
      {{{-1,2,4},{-1,2,5},{1,3,3}}, false, {{-1,1,3},{-1,1,4},{-1,2,3},{-1,2,4},{1,3,3},{1,3,4},{1,3,5}}},
      {{{-1,2,4},{-1,2,5},{1,3,3}}, false, {{-1,1,3},{-1,1,4},{-1,2,3},{1,3,3},{1,3,4}}},
      {{{-1,2,4},{-1,2,5},{1,3,3}}, false, {{-1,1,3},{-1,2,3},{-1,2,5},{1,3,3},{1,3,4}}},
      {{{-1,2,4},{-1,2,5},{1,3,3}}, false, {{-1,1,3},{-1,1,4},{1,3,3}}},
      {{{-1,2,4},{-1,2,5},{1,3,3}}, false, {{-1,1,3},{-1,2,5},{1,3,3}}}},
    {
      {{{-1,1,3},{-1,3,4},{1,4,4},{1,4,5}}, true, {{1,5,5}}},
      {{{-1,1,3},{-1,3,4},{1,4,4},{1,4,5}}, false, {{-1,1,3},{-1,2,3},{1,4,4},{1,4,5}}},
      {{{-1,1,3},{-1,3,4},{1,4,4},{1,4,5}}, true, {{-1,1,3},{1,4,4}}},
      {{{-1,1,3},{-1,3,4},{1,4,4},{1,4,5}}, true, {{-1,2,4},{-1,3,4},{1,4,4},{1,4,5}}},
      {{{-1,1,3},{-1,3,4},{1,4,4},{1,4,5}}, true, {{-1,2,4},{1,4,4}}},
      {{{-1,1,3},{-1,3,4},{1,4,4},{1,4,5}}, true, {{-1,3,5},{1,4,4}}},
      {{{-1,1,3},{-1,3,4},{1,4,4},{1,4,5}}, false, {{-1,1,3},{-1,1,4},{-1,1,5},{1,2,2}}},
      {{{-1,1,3},{-1,3,4},{1,4,4},{1,4,5}}, false, {{-1,1,3},{-1,1,4},{-1,2,3},{-1,2,4},{1,3,3},{1,3,4},{1,3,5}}},
      {{{-1,1,3},{-1,3,4},{1,4,4},{1,4,5}}, false, {{-1,1,3},{-1,1,4},{-1,2,3},{1,3,3},{1,3,4}}},
      {{{-1,1,3},{-1,3,4},{1,4,4},{1,4,5}}, false, {{-1,1,3},{-1,2,3},{-1,2,5},{1,3,3},{1,3,4}}},
      {{{-1,1,3},{-1,3,4},{1,4,4},{1,4,5}}, false, {{-1,1,3},{-1,1,4},{1,3,3}}},
      {{{-1,1,3},{-1,3,4},{1,4,4},{1,4,5}}, false, {{-1,1,3},{-1,2,5},{1,3,3}}},
      {{{-1,1,3},{-1,3,4},{1,4,4},{1,4,5}}, true, {{-1,2,4},{-1,2,5},{1,3,3}}}},
    {
      {{{-1,1,3},{1,4,4}}, true, {{1,5,5}}},
      {{{-1,1,3},{1,4,4}}, false, {{-1,1,3},{-1,2,3},{1,4,4},{1,4,5}}},
      {{{-1,1,3},{1,4,4}}, false, {{-1,1,3},{-1,3,4},{1,4,4},{1,4,5}}},
      {{{-1,1,3},{1,4,4}}, true, {{-1,2,4},{-1,3,4},{1,4,4},{1,4,5}}},
      {{{-1,1,3},{1,4,4}}, true, {{-1,2,4},{1,4,4}}},
      {{{-1,1,3},{1,4,4}}, true, {{-1,3,5},{1,4,4}}},
      {{{-1,1,3},{1,4,4}}, false, {{-1,1,3},{-1,1,4},{-1,1,5},{1,2,2}}},
      {{{-1,1,3},{1,4,4}}, false, {{-1,1,3},{-1,1,4},{-1,2,3},{-1,2,4},{1,3,3},{1,3,4},{1,3,5}}},
      {{{-1,1,3},{1,4,4}}, false, {{-1,1,3},{-1,1,4},{-1,2,3},{1,3,3},{1,3,4}}},
      {{{-1,1,3},{1,4,4}}, false, {{-1,1,3},{-1,2,3},{-1,2,5},{1,3,3},{1,3,4}}},
      {{{-1,1,3},{1,4,4}}, false, {{-1,1,3},{-1,1,4},{1,3,3}}},
      {{{-1,1,3},{1,4,4}}, false, {{-1,1,3},{-1,2,5},{1,3,3}}},
      {{{-1,1,3},{1,4,4}}, true, {{-1,2,4},{-1,2,5},{1,3,3}}}},
    {
      {{{-1,2,4},{-1,3,4},{1,4,4},{1,4,5}}, true, {{1,5,5}}},
      {{{-1,2,4},{-1,3,4},{1,4,4},{1,4,5}}, false, {{-1,1,3},{-1,2,3},{1,4,4},{1,4,5}}},
      {{{-1,2,4},{-1,3,4},{1,4,4},{1,4,5}}, false, {{-1,1,3},{-1,3,4},{1,4,4},{1,4,5}}},
      {{{-1,2,4},{-1,3,4},{1,4,4},{1,4,5}}, true, {{-1,1,3},{1,4,4}}},
      {{{-1,2,4},{-1,3,4},{1,4,4},{1,4,5}}, true, {{-1,2,4},{1,4,4}}},
      {{{-1,2,4},{-1,3,4},{1,4,4},{1,4,5}}, true, {{-1,3,5},{1,4,4}}},
      {{{-1,2,4},{-1,3,4},{1,4,4},{1,4,5}}, false, {{-1,1,3},{-1,1,4},{-1,1,5},{1,2,2}}},
      {{{-1,2,4},{-1,3,4},{1,4,4},{1,4,5}}, false, {{-1,1,3},{-1,1,4},{-1,2,3},{-1,2,4},{1,3,3},{1,3,4},{1,3,5}}},
      {{{-1,2,4},{-1,3,4},{1,4,4},{1,4,5}}, false, {{-1,1,3},{-1,1,4},{-1,2,3},{1,3,3},{1,3,4}}},
      {{{-1,2,4},{-1,3,4},{1,4,4},{1,4,5}}, false, {{-1,1,3},{-1,2,3},{-1,2,5},{1,3,3},{1,3,4}}},
      {{{-1,2,4},{-1,3,4},{1,4,4},{1,4,5}}, false, {{-1,1,3},{-1,1,4},{1,3,3}}},
      {{{-1,2,4},{-1,3,4},{1,4,4},{1,4,5}}, false, {{-1,1,3},{-1,2,5},{1,3,3}}},
      {{{-1,2,4},{-1,3,4},{1,4,4},{1,4,5}}, false, {{-1,2,4},{-1,2,5},{1,3,3}}}},
    {
      {{{-1,2,4},{1,4,4}}, true, {{1,5,5}}},
      {{{-1,2,4},{1,4,4}}, false, {{-1,1,3},{-1,2,3},{1,4,4},{1,4,5}}},
      {{{-1,2,4},{1,4,4}}, false, {{-1,1,3},{-1,3,4},{1,4,4},{1,4,5}}},
      {{{-1,2,4},{1,4,4}}, false, {{-1,1,3},{1,4,4}}},
      {{{-1,2,4},{1,4,4}}, false, {{-1,2,4},{-1,3,4},{1,4,4},{1,4,5}}},
      {{{-1,2,4},{1,4,4}}, true, {{-1,3,5},{1,4,4}}},
      {{{-1,2,4},{1,4,4}}, false, {{-1,1,3},{-1,1,4},{-1,1,5},{1,2,2}}},
      {{{-1,2,4},{1,4,4}}, false, {{-1,1,3},{-1,1,4},{-1,2,3},{-1,2,4},{1,3,3},{1,3,4},{1,3,5}}},
      {{{-1,2,4},{1,4,4}}, false, {{-1,1,3},{-1,1,4},{-1,2,3},{1,3,3},{1,3,4}}},
      {{{-1,2,4},{1,4,4}}, false, {{-1,1,3},{-1,2,3},{-1,2,5},{1,3,3},{1,3,4}}},
      {{{-1,2,4},{1,4,4}}, false, {{-1,1,3},{-1,1,4},{1,3,3}}},
      {{{-1,2,4},{1,4,4}}, false, {{-1,1,3},{-1,2,5},{1,3,3}}},
      {{{-1,2,4},{1,4,4}}, false, {{-1,2,4},{-1,2,5},{1,3,3}}}},
    {
      {{{-1,3,5},{1,4,4}}, true, {{1,5,5}}},
      {{{-1,3,5},{1,4,4}}, false, {{-1,1,3},{-1,2,3},{1,4,4},{1,4,5}}},
      {{{-1,3,5},{1,4,4}}, false, {{-1,1,3},{-1,3,4},{1,4,4},{1,4,5}}},
      {{{-1,3,5},{1,4,4}}, false, {{-1,1,3},{1,4,4}}},
      {{{-1,3,5},{1,4,4}}, false, {{-1,2,4},{-1,3,4},{1,4,4},{1,4,5}}},
      {{{-1,3,5},{1,4,4}}, false, {{-1,2,4},{1,4,4}}},
      {{{-1,3,5},{1,4,4}}, false, {{-1,1,3},{-1,1,4},{-1,1,5},{1,2,2}}},
      {{{-1,3,5},{1,4,4}}, false, {{-1,1,3},{-1,1,4},{-1,2,3},{-1,2,4},{1,3,3},{1,3,4},{1,3,5}}},
      {{{-1,3,5},{1,4,4}}, false, {{-1,1,3},{-1,1,4},{-1,2,3},{1,3,3},{1,3,4}}},
      {{{-1,3,5},{1,4,4}}, false, {{-1,1,3},{-1,2,3},{-1,2,5},{1,3,3},{1,3,4}}},
      {{{-1,3,5},{1,4,4}}, false, {{-1,1,3},{-1,1,4},{1,3,3}}},
      {{{-1,3,5},{1,4,4}}, false, {{-1,1,3},{-1,2,5},{1,3,3}}},
      {{{-1,3,5},{1,4,4}}, false, {{-1,2,4},{-1,2,5},{1,3,3}}}},
    {
      {{{1,5,5}}, false, {{-1,1,3},{-1,2,3},{1,4,4},{1,4,5}}},
      {{{1,5,5}}, false, {{-1,1,3},{-1,3,4},{1,4,4},{1,4,5}}},
      {{{1,5,5}}, false, {{-1,1,3},{1,4,4}}},
      {{{1,5,5}}, false, {{-1,2,4},{-1,3,4},{1,4,4},{1,4,5}}},
      {{{1,5,5}}, false, {{-1,2,4},{1,4,4}}},
      {{{1,5,5}}, false, {{-1,3,5},{1,4,4}}},
      {{{1,5,5}}, false, {{-1,1,3},{-1,1,4},{-1,1,5},{1,2,2}}},
      {{{1,5,5}}, false, {{-1,1,3},{-1,1,4},{-1,2,3},{-1,2,4},{1,3,3},{1,3,4},{1,3,5}}},
      {{{1,5,5}}, false, {{-1,1,3},{-1,1,4},{-1,2,3},{1,3,3},{1,3,4}}},
      {{{1,5,5}}, false, {{-1,1,3},{-1,2,3},{-1,2,5},{1,3,3},{1,3,4}}},
      {{{1,5,5}}, false, {{-1,1,3},{-1,1,4},{1,3,3}}},
      {{{1,5,5}}, false, {{-1,1,3},{-1,2,5},{1,3,3}}},
      {{{1,5,5}}, false, {{-1,2,4},{-1,2,5},{1,3,3}}}}
  }};
  return blocks;
}

const std::array<std::vector<Shift>, 14>& e0_shifts() {
  static const std::array<std::vector<Shift>, 14> shifts = {{
    {{1,1,-1}, {1,6,1}, {2,2,-1}, {2,7,1}, {3,6,-1}, {3,8,1}, {4,7,-1}, {4,9,1}, {5,8,-1}, {5,10,1}, {6,9,-1}, {6,11,1}},
    {{1,1,-1}, {1,5,1}, {2,2,-1}, {2,6,1}, {3,5,-1}, {3,8,1}, {4,6,-1}, {4,9,1}, {5,8,-1}, {5,10,1}, {6,9,-1}, {6,11,1}},
    {{1,1,-1}, {1,5,1}, {2,2,-1}, {2,4,1}, {2,5,-1}, {2,6,1}, {3,4,-1}, {3,8,1}, {4,6,-1}, {4,7,1}, {4,8,-1}, {4,9,1}, {5,7,-1}, {5,10,1}, {6,9,-1}, {6,11,1}},
    {{1,1,-1}, {1,4,1}, {2,2,-1}, {2,6,1}, {3,4,-1}, {3,7,1}, {4,6,-1}, {4,9,1}, {5,7,-1}, {5,10,1}, {6,9,-1}, {6,11,1}},
    {{1,1,-1}, {1,5,1}, {2,2,-1}, {2,3,1}, {2,5,-1}, {2,6,1}, {3,3,-1}, {3,8,1}, {4,6,-1}, {4,7,1}, {4,8,-1}, {4,9,1}, {5,7,-1}, {5,8,1}, {5,9,-1}, {5,10,1}, {6,8,-1}, {6,11,1}},
    {{1,1,-1}, {1,4,1}, {2,2,-1}, {2,5,1}, {3,4,-1}, {3,6,1}, {4,5,-1}, {4,9,1}, {5,6,-1}, {5,10,1}, {6,9,-1}, {6,11,1}},
    {{1,1,-1}, {1,4,1}, {2,2,-1}, {2,3,1}, {2,4,-1}, {2,6,1}, {3,3,-1}, {3,7,1}, {4,6,-1}, {4,9,1}, {5,7,-1}, {5,8,1}, {5,9,-1}, {5,10,1}, {6,8,-1}, {6,11,1}},
    {{1,1,-1}, {1,3,1}, {2,2,-1}, {2,6,1}, {3,3,-1}, {3,7,1}, {4,6,-1}, {4,8,1}, {5,7,-1}, {5,10,1}, {6,8,-1}, {6,11,1}},
    {{1,1,-1}, {1,4,1}, {2,2,-1}, {2,3,1}, {2,4,-1}, {2,5,1}, {3,3,-1}, {3,6,1}, {4,5,-1}, {4,9,1}, {5,6,-1}, {5,8,1}, {5,9,-1}, {5,10,1}, {6,8,-1}, {6,11,1}},
    {{1,1,-1}, {1,4,1}, {2,2,-1}, {2,3,1}, {2,4,-1}, {2,5,1}, {3,3,-1}, {3,4,1}, {3,5,-1}, {3,6,1}, {4,4,-1}, {4,9,1}, {5,6,-1}, {5,7,1}, {5,9,-1}, {5,10,1}, {6,7,-1}, {6,11,1}},
    {{1,1,-1}, {1,3,1}, {2,2,-1}, {2,5,1}, {3,3,-1}, {3,6,1}, {4,5,-1}, {4,8,1}, {5,6,-1}, {5,10,1}, {6,8,-1}, {6,11,1}},
    {{1,1,-1}, {1,3,1}, {2,2,-1}, {2,5,1}, {3,3,-1}, {3,4,1}, {3,5,-1}, {3,6,1}, {4,4,-1}, {4,8,1}, {5,6,-1}, {5,7,1}, {5,8,-1}, {5,10,1}, {6,7,-1}, {6,11,1}},
    {{1,1,-1}, {1,3,1}, {2,2,-1}, {2,4,1}, {3,3,-1}, {3,6,1}, {4,4,-1}, {4,7,1}, {5,6,-1}, {5,10,1}, {6,7,-1}, {6,11,1}},
    {{1,1,-1}, {1,3,1}, {2,2,-1}, {2,4,1}, {3,3,-1}, {3,5,1}, {4,4,-1}, {4,6,1}, {5,5,-1}, {5,10,1}, {6,6,-1}, {6,11,1}}
  }};
  return shifts;
}

// clang-format on

}  // namespace d6::detail
