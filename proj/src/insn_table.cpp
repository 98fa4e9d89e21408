// Generated by tools/gen_insn_table. Do not edit.
#include <cstddef>

namespace partmon::detail {
  extern char const* const insn_table[];
  extern std::size_t const insn_table_size;
  char const* const insn_table[] = {
      "2 0,1 K 1 0 F2.2:1,2@0+;F2.1:2,1@0-;F2.2:1,2@2-;F2.2:1,2@0-;F2.2:1,2@1+",
      "2 0,1 M 2 1 ",
      "2 0,2 M 1 2 F1:1,2@0+",
      "2 0,2 K 2 0 ",
      "2 1,0 K 1 0 F2.2:1,2@1+;F2.2:1,2@2-;F2.2:1,2@0-;F2.2:1,2@1+",
      "2 1,0 M 2 1 F1:2,1@0+",
      "2 2,0 M 1 2 ",
      "2 2,0 K 2 0 F2.2:1,2@0-;F2.1:1,2@0-;F2.2:1,2@1+",
      "3 0,0,1 K 1 0 F4:1,2,3@3+;F2.2:1,3@2+;F2.1:3,1@2-;F2.2:1,3@2-;F5.1:1,2,3@1+;F5.1:2,1,3@0+;F2.2:1,3@4-;F2.2:1,3@3+;F5.2:3,1,2@2+;F5.2:3,2,1@1+;F4:1,2,3@0-",
      "3 0,0,1 M 2 1 F1:1,3@2-;F4:1,2,3@2-;F2.2:1,2@1+;F2.1:2,1@0+;F2.2:1,2@0-;F4:1,2,3@1+;F1:1,3@1+;F5.1:2,1,3@1-",
      "3 0,0,1 M 3 1 F5.1:1,2,3@1+;F5.1:2,1,3@0+;F5.2:3,1,2@2+;F5.2:3,2,1@1+;F4:1,2,3@0-",
      "3 0,0,2 M 1 2 F1:2,3@2-;F4:2,1,3@2-;F2.2:1,2@1-;F2.1:1,2@0+;F2.2:1,2@0+;F4:2,1,3@1+;F1:2,3@1+;F5.1:1,2,3@1-",
      "3 0,0,2 K 2 0 F4:2,1,3@3+;F2.2:2,3@2+;F2.1:3,2@2-;F2.2:2,3@2-;F4:2,1,3@3-;F5.2:1,3,2@4-;F5.1:3,2,1@3-;F4:2,1,3@2-",
      "3 0,0,2 M 3 2 F4:2,1,3@2-",
      "3 0,0,3 M 1 3 F4:1,2,3@0+;F5.2:3,2,1@1-;F5.1:2,1,3@0-;F5.1:1,2,3@3+;F1:2,3@1+;F5.1:1,2,3@1-",
      "3 0,0,3 M 2 3 F4:2,1,3@2+;F1:2,3@2+",
      "3 0,0,3 K 3 0 ",
      "3 0,1,0 K 1 0 F2.2:1,2@2+;F2.1:2,1@2+;F5.2:2,1,3@1+;F5.2:2,3,1@0+;F5.2:2,1,3@2+;F5.2:2,3,1@1+;F2.2:1,2@0-;F2.1:1,2@0-;F2.1:1,2@0-;F2.2:1,2@1+",
      "3 0,1,0 M 2 1 F5.1:1,3,2@1+;F5.2:2,1,3@2+;F5.1:3,1,2@0+;F5.2:2,3,1@1+",
      "3 0,1,0 M 3 1 F1:1,2@2-;F4:1,2,3@2+;F2.2:1,3@1+;F2.1:3,1@0+;F2.2:1,3@0-;F4:1,2,3@1-;F1:1,2@1+;F5.1:3,1,2@1-;F4:1,2,3@0-",
      "3 0,1,2 K 1 0 F5.1:1,2,3@1-;F1:1,3@2-;F4:1,2,3@2-;F2.1:1,2@0+;F4:1,2,3@1+;F1:1,3@1+;F5.1:2,1,3@1-",
      "3 0,1,2 K 2 0 F4:2,1,3@2+;F2.2:2,3@1+;F5.2:1,3,2@0-;F2.1:3,2@2-;F2.2:2,3@3-;F4:3,1,2@2-;F1:1,3@1+;F5.2:1,2,3@1-;F4:3,1,2@0-",
      "3 0,1,2 M 3 1 F1:1,2@0-;F6:2,3,1@2+",
      "3 0,1,2 M 3 2 F4:2,1,3@1-;F1:1,2@0+",
      "3 0,1,3 K 1 0 F2.2:1,2@0+;F2.1:2,1@0-;F2.2:1,2@0-;F2.2:1,2@2-;F2.2:1,2@1+",
      "3 0,1,3 M 2 1 ",
      "3 0,1,3 M 2 3 ",
      "3 0,1,3 K 3 0 F5.1:3,1,2@0-;F5.1:1,3,2@1-",
      "3 0,2,0 M 1 2 F5.1:1,3,2@3+;F5.1:3,1,2@2+;F1:1,2@0+;F5.1:3,1,2@0-;F5.1:1,3,2@1-",
      "3 0,2,0 K 2 0 F5.2:2,1,3@3+;F5.1:1,3,2@4+;F5.2:2,3,1@2+;F5.1:3,1,2@3+",
      "3 0,2,0 M 3 2 F4:3,1,2@2+;F1:3,2@2+",
      "3 0,2,1 K 1 0 F4:1,2,3@1+;F2.2:1,3@0+;F2.1:3,1@0-;F2.2:1,3@0-;F2.2:1,3@2-;F2.2:1,3@1+;F4:1,2,3@0-",
      "3 0,2,1 K 2 0 F5.1:2,1,3@0-;F5.1:1,2,3@1-",
      "3 0,2,1 M 3 1 F4:1,2,3@0-",
      "3 0,2,1 M 3 2 ",
      "3 0,2,3 M 1 2 F1:1,2@0+",
      "3 0,2,3 M 1 3 F4:1,2,3@0+;F1:1,3@0+",
      "3 0,2,3 K 2 0 ",
      "3 0,2,3 K 3 0 ",
      "3 0,3,0 M 1 3 F5.2:3,2,1@1+;F5.1:3,1,2@0-;F6:1,2,3@1-;F2.1:3,1@0-;F2.2:1,3@1-;F5.1:1,3,2@2+;F5.2:1,2,3@3-;F4:3,1,2@2-;F1:3,1@0+",
      "3 0,3,0 M 2 3 F4:3,1,2@2-",
      "3 0,3,0 K 3 0 F4:3,1,2@3+;F2.2:2,3@2-;F2.1:2,3@2-;F2.2:2,3@3+;F4:3,1,2@4-;F4:2,1,3@2-",
      "3 0,3,1 K 1 0 F4:1,2,3@2+;F5.1:1,3,2@1-;F1:1,2@2-;F4:1,2,3@2+;F2.1:1,3@0+;F4:1,2,3@1-;F1:1,2@1+;F5.1:3,1,2@1-;F4:1,2,3@0-",
      "3 0,3,1 M 2 1 F1:1,3@0-;F4:1,2,3@0-",
      "3 0,3,1 M 2 3 F4:3,1,2@1-;F1:1,3@0+",
      "3 0,3,1 K 3 0 F4:3,1,2@2+;F2.2:2,3@1-;F5.2:1,2,3@0-;F2.1:2,3@2-;F2.2:2,3@3+;F4:2,1,3@2-;F1:1,2@1+;F5.2:1,3,2@1-;F4:2,1,3@0-",
      "3 0,3,2 M 1 2 F4:2,1,3@4+;F1:3,2@3+;F4:1,2,3@0+;F1:1,3@0+",
      "3 0,3,2 M 1 3 F6:1,2,3@3-;F4:1,2,3@2-;F1:1,2@0+;F1:1,2@0+",
      "3 0,3,2 K 2 0 F6:1,3,2@1+;F2.2:1,2@4-;F2.1:1,2@3+;F2.1:1,2@3+;F6:1,3,2@1-;F5.2:3,1,2@3-;F5.1:3,1,2@3-;F4:1,2,3@2-;F1:1,2@0+",
      "3 0,3,2 K 3 0 F6:2,3,1@2-;F2.1:3,1@4-;F2.2:1,3@5-;F2.1:1,3@5+;F4:3,1,2@4+;F1:2,3@3+;F5.2:2,1,3@3-;F5.1:2,1,3@3-;F1:1,2@0+",
      "3 1,0,0 K 1 0 F5.1:1,3,2@3+;F5.1:3,1,2@2+;F5.2:2,1,3@4+;F5.2:2,3,1@3+;F2.2:1,2@1+;F2.2:1,2@2-;F2.2:1,2@0-;F2.2:1,2@1+",
      "3 1,0,0 M 2 1 F5.1:2,1,3@3-;F5.2:3,2,1@2-;F1:2,1@0+;F5.2:3,2,1@0+;F5.1:2,1,3@1+",
      "3 1,0,0 M 3 1 F1:3,1@2+",
      "3 1,0,2 K 1 0 F5.1:1,2,3@0-;F5.1:2,1,3@1-",
      "3 1,0,2 K 2 0 F4:2,1,3@1+;F2.2:2,3@0+;F2.1:3,2@0-;F2.2:2,3@0-;F4:2,1,3@1-;F5.2:1,3,2@2-;F5.1:3,2,1@1-;F4:2,1,3@0-",
      "3 1,0,2 M 3 1 ",
      "3 1,0,2 M 3 2 F4:2,1,3@0-",
      "3 1,0,3 K 1 0 F2.2:1,2@1+;F2.2:1,2@2-;F2.2:1,2@0-;F2.2:1,2@1+",
      "3 1,0,3 M 2 1 F1:2,1@0+",
      "3 1,0,3 M 2 3 F4:2,1,3@0+;F1:2,3@0+",
      "3 1,0,3 K 3 0 ",
      "3 1,2,0 K 1 0 F5.1:1,3,2@1+;F5.2:2,1,3@2+;F5.1:3,1,2@0+;F5.2:2,3,1@1+",
      "3 1,2,0 K 2 0 F5.2:2,1,3@1+;F5.1:1,3,2@2+;F5.2:2,3,1@0+;F5.1:3,1,2@1+",
      "3 1,2,0 M 3 1 F1:3,1@0+",
      "3 1,2,0 M 3 2 F4:3,1,2@0+;F1:3,2@0+",
      "3 1,3,0 K 1 0 F5.2:3,1,2@0-;F5.2:3,2,1@1-",
      "3 1,3,0 M 2 1 ",
      "3 1,3,0 M 2 3 F4:3,1,2@0-",
      "3 1,3,0 K 3 0 F4:3,1,2@1+;F2.2:2,3@0-;F2.1:2,3@0-;F2.2:2,3@1+;F4:3,1,2@2-;F4:2,1,3@0-",
      "3 2,0,0 M 1 2 F5.2:2,1,3@1+;F5.1:1,3,2@2+;F5.2:2,3,1@0+;F5.1:3,1,2@1+",
      "3 2,0,0 K 2 0 F5.1:2,1,3@1-;F5.2:3,2,1@0-;F5.1:2,3,1@2+;F5.1:3,2,1@1+;F2.2:1,2@0-;F5.1:1,2,3@3-;F5.2:3,1,2@2-;F2.1:1,2@0-;F2.2:1,2@1+",
      "3 2,0,0 M 3 2 F5.2:2,1,3@1+;F5.1:2,3,1@0-;F6:1,3,2@1+;F2.1:2,3@0-;F2.2:2,3@1+;F5.1:3,2,1@2+;F5.2:3,1,2@3-;F4:2,1,3@0-;F1:2,1@0+",
      "3 2,0,1 K 1 0 F4:1,2,3@2+;F2.2:1,3@1+;F2.1:3,1@1-;F2.2:1,3@3-;F4:3,1,2@2+;F5.2:2,3,1@0-;F1:2,3@1+;F5.2:2,1,3@1-",
      "3 2,0,1 K 2 0 F5.1:2,1,3@1-;F1:2,3@2-;F4:2,1,3@2-;F2.1:2,1@0+;F4:2,1,3@1+;F1:2,3@1+;F5.1:1,2,3@1-",
      "3 2,0,1 M 3 1 F4:1,2,3@1-;F1:2,1@0+",
      "3 2,0,1 M 3 2 F1:2,1@0-;F6:1,3,2@2+",
      "3 2,0,3 M 1 2 ",
      "3 2,0,3 M 1 3 ",
      "3 2,0,3 K 2 0 F2.2:1,2@0-;F2.1:1,2@0-;F2.2:1,2@1+",
      "3 2,0,3 K 3 0 F5.2:2,3,1@0-;F5.2:2,1,3@1-",
      "3 2,1,0 K 1 0 F6:2,3,1@1-;F4:1,2,3@5+;F2.2:1,3@4+;F2.1:3,1@3+;F2.1:3,1@3+;F6:2,3,1@1+;F5.2:2,3,1@3-;F5.1:2,3,1@3-;F4:3,1,2@2-;F1:3,1@0+",
      "3 2,1,0 K 2 0 F6:2,3,1@1-;F4:3,1,2@3+;F4:2,1,3@5+;F2.2:2,3@4+;F2.1:3,2@3+;F2.1:3,2@3+;F4:2,1,3@2-;F1:1,2@1+;F5.2:1,3,2@1-;F5.1:1,3,2@1-",
      "3 2,1,0 M 3 1 F4:1,2,3@4-;F1:2,1@3+;F4:3,1,2@0+;F1:3,2@0+",
      "3 2,1,0 M 3 2 F6:1,3,2@3+;F4:3,1,2@2-;F1:3,1@0+;F1:3,1@0+",
      "3 2,3,0 M 1 2 F4:2,1,3@1+;F1:3,2@0+",
      "3 2,3,0 M 1 3 F1:3,2@0-;F4:3,1,2@0-",
      "3 2,3,0 K 2 0 F2.2:1,2@1-;F2.1:1,2@1-;F2.2:1,2@3+;F4:1,2,3@2+;F5.2:3,1,2@0-;F1:3,1@1+;F5.2:3,2,1@1-",
      "3 2,3,0 K 3 0 F4:3,1,2@2+;F5.1:3,2,1@1-;F1:3,1@2-;F4:3,1,2@2+;F2.1:3,2@0+;F4:3,1,2@1-;F1:3,1@1+;F5.1:2,3,1@1-;F4:3,1,2@0-",
      "3 3,0,0 M 1 3 ",
      "3 3,0,0 M 2 3 F5.2:3,1,2@1+;F5.1:3,2,1@0-;F6:1,2,3@1+;F2.1:3,2@0-;F2.2:2,3@1-;F5.1:2,3,1@2+;F5.2:2,1,3@3-;F4:3,1,2@0-;F1:3,1@0+",
      "3 3,0,0 K 3 0 F2.2:1,3@2-;F5.1:1,2,3@1+;F2.1:1,3@3-;F2.2:1,3@3+;F5.2:3,1,2@2+;F5.1:2,1,3@0+;F5.2:3,2,1@1+;F4:1,2,3@0-",
      "3 3,0,1 K 1 0 F6:2,3,1@1+;F2.2:1,2@4+;F2.1:2,1@3+;F2.1:2,1@3+;F6:2,3,1@1-;F5.2:3,2,1@3-;F5.1:3,2,1@3-;F4:2,1,3@2-;F1:2,1@0+",
      "3 3,0,1 M 2 1 F4:1,2,3@4+;F1:3,1@3+;F4:2,1,3@0+;F1:2,3@0+",
      "3 3,0,1 M 2 3 F6:1,2,3@3+;F4:2,1,3@2-;F1:2,1@0+;F1:2,1@0+",
      "3 3,0,1 K 3 0 F6:2,3,1@1+;F4:2,1,3@3+;F4:3,1,2@5+;F2.2:2,3@4-;F2.1:2,3@3+;F2.1:2,3@3+;F4:3,1,2@2-;F1:1,3@1+;F5.2:1,2,3@1-;F5.1:1,2,3@1-",
      "3 3,0,2 M 1 2 F1:2,3@0-;F4:2,1,3@0-",
      "3 3,0,2 M 1 3 F4:3,1,2@1+;F1:2,3@0+",
      "3 3,0,2 K 2 0 F4:2,1,3@2+;F5.1:2,3,1@1-;F1:2,1@2-;F4:2,1,3@2+;F2.1:2,3@0+;F4:2,1,3@1-;F1:2,1@1+;F5.1:3,2,1@1-;F4:2,1,3@0-",
      "3 3,0,2 K 3 0 F2.2:1,3@1-;F5.2:2,1,3@0-;F2.1:1,3@2-;F2.2:1,3@2+;F4:3,1,2@3+;F5.2:2,3,1@1-;F1:2,3@2+;F4:1,2,3@0-",
      "3 3,1,0 K 1 0 F2.2:1,2@1+;F2.1:2,1@1-;F2.2:1,2@3-;F4:2,1,3@2+;F5.2:3,2,1@0-;F1:3,2@1+;F5.2:3,1,2@1-",
      "3 3,1,0 M 2 1 F4:1,2,3@1+;F1:3,1@0+",
      "3 3,1,0 M 2 3 F1:3,1@0-;F6:1,2,3@2+",
      "3 3,1,0 K 3 0 F5.1:3,1,2@1-;F1:3,2@2-;F4:3,1,2@2-;F2.1:3,1@0+;F4:3,1,2@1+;F1:3,2@1+;F5.1:1,3,2@1-",
      "3 3,2,0 M 1 2 ",
      "3 3,2,0 M 1 3 ",
      "3 3,2,0 K 2 0 F5.2:3,2,1@0-;F5.2:3,1,2@1-",
      "3 3,2,0 K 3 0 F2.2:1,3@0-;F2.1:1,3@0-;F2.2:1,3@1+;F4:1,2,3@0-",
      "4 0,0,0,1 K 1 0 F4:1,2,4@5+;F2.2:1,4@4+;F2.1:4,1@4-;F2.2:1,4@4-;F5.1:1,3,4@3+;F5.1:3,1,4@2+;F5.1:1,2,4@1+;F5.1:2,1,4@0+;F2.2:1,4@6-;F2.2:1,4@5+;F5.2:4,1,3@4+;F5.2:4,3,1@3+;F5.2:4,1,2@2+;F5.2:4,2,1@1+;F4:1,2,4@0-",
      "4 0,0,0,1 M 2 1 F5.1:1,3,4@3+;F5.1:3,1,4@2+;F1:1,4@2-;F4:1,2,4@2-;F2.2:1,2@1+;F2.1:2,1@0+;F2.2:1,2@0-;F4:1,2,4@1+;F1:1,4@1+;F5.1:3,1,4@1-;F5.1:1,3,4@2-;F5.1:2,1,4@3-;F5.2:2,1,3@2+;F5.2:2,3,1@1+",
      "4 0,0,0,1 M 3 1 F1:1,4@4-;F4:1,3,4@4-;F2.2:1,3@3+;F2.1:3,1@2+;F2.2:1,3@2-;F4:1,3,4@3+;F1:1,4@3+;F5.1:3,1,4@3-;F5.1:1,2,3@1+;F5.2:3,1,2@2+;F5.1:2,1,3@0+;F5.2:3,2,1@1+;F4:1,2,3@0-",
      "4 0,0,0,1 M 4 1 F5.1:1,3,4@3+;F5.1:3,1,4@2+;F5.1:1,2,4@1+;F5.1:2,1,4@0+;F5.2:4,1,3@4+;F5.2:4,3,1@3+;F5.2:4,1,2@2+;F5.2:4,2,1@1+;F4:1,2,4@0-",
      "4 0,0,0,2 M 1 2 F3:1,3,2,4@3+;F3:2,4,3,1@2-;F1:2,4@2-;F4:2,1,4@2-;F2.2:1,2@1-;F2.1:1,2@0+;F2.2:1,2@0+;F4:2,1,4@1+;F1:2,4@1+;F3:2,4,3,1@1+;F3:1,3,2,4@2-;F5.1:1,2,4@3-;F5.1:1,3,2@2+;F5.1:3,1,2@1+",
      "4 0,0,0,2 K 2 0 F4:2,1,4@5+;F2.2:2,4@4+;F2.1:4,2@4-;F2.2:2,4@4-;F4:2,1,4@5-;F5.2:1,4,2@6-;F5.1:4,2,1@5-;F3:1,3,2,4@3+;F3:1,3,4,2@4+;F3:2,4,3,1@2-;F3:3,1,4,2@3+;F4:2,1,4@2-",
      "4 0,0,0,2 M 3 2 F4:3,1,2@2+;F1:2,4@4-;F4:2,3,4@4-;F2.2:2,3@3+;F2.1:3,2@2+;F2.2:2,3@2-;F4:2,3,4@3+;F1:2,4@3+;F5.1:3,2,4@3-;F4:2,1,3@2-",
      "4 0,0,0,2 M 4 2 F3:1,3,2,4@3+;F3:2,4,3,1@2-;F3:1,3,4,2@4+;F3:3,1,4,2@3+;F4:2,1,4@2-",
      "4 0,0,0,3 M 1 3 F4:1,2,3@0+;F5.2:3,2,1@1-;F5.1:2,1,3@0-;F5.2:3,1,2@2-;F5.1:1,2,3@1-;F1:3,4@4-;F4:3,1,4@4-;F2.2:1,3@3-;F2.1:1,3@2+;F2.2:1,3@2+;F4:3,1,4@3+;F1:3,4@3+;F5.1:1,3,4@3-",
      "4 0,0,0,3 M 2 3 F4:2,1,3@2+;F1:3,4@4-;F4:3,2,4@4-;F2.2:2,3@3-;F2.1:2,3@2+;F2.2:2,3@2+;F4:3,2,4@3+;F1:3,4@3+;F5.1:2,3,4@3-;F4:3,1,2@2-",
      "4 0,0,0,3 K 3 0 F4:3,1,4@5+;F2.2:3,4@4+;F2.1:4,3@4-;F2.2:3,4@4-;F4:3,1,4@5-;F5.2:1,4,3@6-;F5.1:4,3,1@5-;F4:3,1,4@4-",
      "4 0,0,0,3 M 4 3 F4:3,1,4@4-",
      "4 0,0,0,4 M 1 4 F4:1,2,4@0+;F5.2:4,2,1@1-;F5.1:2,1,4@0-;F5.2:4,1,2@2-;F5.1:1,2,4@1-;F5.1:1,3,4@5+;F5.1:3,1,4@4+;F1:1,4@2+;F5.1:3,1,4@2-;F5.1:1,3,4@3-",
      "4 0,0,0,4 M 2 4 F4:2,1,4@2+;F3:3,1,4,2@3-;F3:2,4,3,1@2+;F3:1,3,2,4@5+;F1:2,4@3+;F3:1,3,2,4@3-",
      "4 0,0,0,4 M 3 4 F4:3,1,4@4+;F1:3,4@4+",
      "4 0,0,0,4 K 4 0 ",
      "4 0,0,1,0 K 1 0 F4:1,2,3@5+;F2.2:1,3@4+;F2.1:3,1@4+;F5.2:3,1,4@3+;F5.2:3,4,1@2+;F5.2:3,1,4@4+;F5.2:3,4,1@3+;F2.2:1,3@2-;F2.1:1,3@2-;F2.1:1,3@2-;F2.2:1,3@3+;F5.1:1,2,3@1+;F5.2:3,1,2@2+;F5.1:2,1,3@0+;F5.2:3,2,1@1+;F4:1,2,3@0-",
      "4 0,0,1,0 M 2 1 F5.1:1,4,3@3+;F5.1:4,1,3@2+;F1:1,3@2-;F4:1,2,3@2-;F2.2:1,2@1+;F2.1:2,1@0+;F2.2:1,2@0-;F4:1,2,3@1+;F1:1,3@1+;F5.1:4,1,3@1-;F5.1:1,4,3@2-;F5.1:2,1,3@3-;F5.2:2,1,4@2+;F5.2:2,4,1@1+",
      "4 0,0,1,0 M 3 1 F5.1:1,4,3@3+;F5.1:4,1,3@2+;F5.1:1,2,3@1+;F5.1:2,1,3@0+;F5.2:3,1,4@4+;F5.2:3,4,1@3+;F5.2:3,1,2@2+;F5.2:3,2,1@1+;F4:1,2,3@0-",
      "4 0,0,1,0 M 4 1 F1:1,3@4-;F4:1,3,4@4+;F2.2:1,4@3+;F2.1:4,1@2+;F2.2:1,4@2-;F4:1,3,4@3-;F1:1,3@3+;F5.1:4,1,3@3-;F5.1:1,2,4@1+;F5.2:4,1,2@2+;F5.1:2,1,4@0+;F5.2:4,2,1@1+;F4:1,2,4@0-",
      "4 0,0,1,2 K 1 0 F5.1:1,2,4@1-;F5.1:2,1,4@2-;F4:1,2,3@1+;F2.2:1,3@0+;F2.1:3,1@0-;F2.2:1,3@2-;F2.2:1,3@0-;F2.2:1,3@1+;F4:1,2,3@0-",
      "4 0,0,1,2 K 2 0 F3:1,3,2,4@0+;F5.1:2,1,3@1-;F5.1:1,2,3@2-;F4:2,1,4@1+;F2.2:2,4@0+;F2.1:4,2@0-;F2.2:2,4@0-;F4:2,1,4@1-;F5.2:1,4,2@2-;F5.1:4,2,1@1-;F4:2,1,4@0-",
      "4 0,0,1,2 M 3 1 F3:2,4,3,1@1+;F4:1,2,3@0-",
      "4 0,0,1,2 M 3 2 F1:2,4@1-;F4:2,3,4@1-;F5.2:1,2,3@0-;F5.1:3,2,4@3-;F2.2:2,3@2-;F2.1:2,3@2-;F2.2:2,3@2+;F4:3,2,4@3+;F1:3,4@3+;F5.2:1,3,2@1-;F4:2,1,3@0-",
      "4 0,0,1,2 M 4 1 F1:1,3@0-;F4:1,3,4@0+;F3:1,3,2,4@2+;F5.2:2,4,1@1+;F5.1:4,1,3@3-;F2.2:1,4@2-;F2.1:1,4@2-;F2.2:1,4@2+;F4:4,1,3@3+;F1:4,3@3+;F5.2:2,4,1@1-;F4:1,2,4@0-",
      "4 0,0,1,2 M 4 2 F3:1,3,2,4@0+;F3:1,3,4,2@1+;F4:2,1,4@0-",
      "4 0,0,1,3 K 1 0 F4:1,2,3@4+;F5.1:1,3,4@3-;F2.2:1,3@2+;F2.1:3,1@2-;F2.2:1,3@2-;F5.1:1,2,3@1+;F5.1:2,1,3@0+;F4:1,3,4@3+;F1:1,4@3+;F5.1:3,1,4@3-;F5.2:3,1,2@2+;F5.2:3,2,1@1+;F4:1,2,3@0-",
      "4 0,0,1,3 M 2 1 F1:1,3@2-;F4:1,2,3@2-;F2.2:1,2@1+;F3:2,1,3,4@5-;F2.1:2,1@0+;F2.2:1,2@0-;F4:1,2,3@1+;F1:1,3@1+;F5.1:2,1,3@1-",
      "4 0,0,1,3 M 2 3 F5.1:1,2,3@1+;F5.2:1,2,3@1+;F1:1,3@1-;F4:3,1,2@2+;F5.1:2,3,4@5-;F2.1:2,3@3+;F4:3,1,2@2-;F1:1,3@1+;F5.2:1,2,3@1-;F5.1:2,1,3@0+;F4:2,1,4@1+;F1:2,4@1+",
      "4 0,0,1,3 K 3 0 F4:3,1,4@4+;F2.2:3,4@3+;F2.1:4,3@3-;F2.2:3,4@5-;F4:4,1,3@4-;F5.2:1,4,3@2-;F1:1,4@3+;F5.2:1,3,4@3-;F4:4,1,3@2-",
      "4 0,0,1,3 M 4 1 F5.1:1,2,3@1+;F5.1:2,1,3@0+;F1:1,3@0-;F4:1,2,3@0-;F5.1:2,1,3@2-;F5.1:1,2,3@3-;F6:3,4,1@4+",
      "4 0,0,1,3 M 4 3 F4:3,1,4@3-;F1:1,3@2+",
      "4 0,0,1,4 K 1 0 F4:1,2,3@3+;F2.2:1,3@2+;F2.1:3,1@2-;F2.2:1,3@2-;F5.1:1,2,3@1+;F5.1:2,1,3@0+;F2.2:1,3@4-;F2.2:1,3@3+;F5.2:3,1,2@2+;F5.2:3,2,1@1+;F4:1,2,3@0-",
      "4 0,0,1,4 M 2 1 F1:1,3@2-;F4:1,2,3@2-;F2.2:1,2@1+;F2.1:2,1@0+;F2.2:1,2@0-;F4:1,2,3@1+;F1:1,3@1+;F5.1:2,1,3@1-",
      "4 0,0,1,4 M 2 4 F4:2,1,4@0+;F3:1,3,4,2@1-;F3:1,3,2,4@0-;F1:2,4@1+",
      "4 0,0,1,4 M 3 1 F5.1:1,2,3@1+;F5.1:2,1,3@0+;F5.2:3,1,2@2+;F5.2:3,2,1@1+;F4:1,2,3@0-",
      "4 0,0,1,4 M 3 4 ",
      "4 0,0,1,4 K 4 0 F5.1:4,1,3@2-;F5.1:1,4,3@3-",
      "4 0,0,2,0 M 1 2 F3:1,4,2,3@3+;F3:2,3,4,1@2-;F1:2,3@2-;F4:2,1,3@2-;F2.2:1,2@1-;F2.1:1,2@0+;F2.2:1,2@0+;F4:2,1,3@1+;F1:2,3@1+;F3:2,3,4,1@1+;F3:1,4,2,3@2-;F5.1:1,2,3@3-;F5.1:1,4,2@2+;F5.1:4,1,2@1+",
      "4 0,0,2,0 K 2 0 F4:2,1,3@5+;F2.2:2,3@4+;F2.1:3,2@4+;F3:1,4,3,2@3+;F3:3,2,4,1@2-;F3:1,4,3,2@4+;F3:3,2,4,1@3-;F2.2:2,3@2-;F2.1:2,3@2-;F2.1:2,3@2-;F2.2:2,3@3+;F4:3,1,2@4-;F4:2,1,3@2-",
      "4 0,0,2,0 M 3 2 F3:1,4,2,3@3+;F3:2,3,4,1@2-;F3:1,4,3,2@4+;F3:3,2,4,1@3-;F4:2,1,3@2-",
      "4 0,0,2,0 M 4 2 F4:4,1,2@2+;F1:2,3@4-;F4:2,3,4@4+;F2.2:2,4@3+;F2.1:4,2@2+;F2.2:2,4@2-;F4:2,3,4@3-;F1:2,3@3+;F5.1:4,2,3@3-;F4:2,1,4@2-",
      "4 0,0,2,1 K 1 0 F4:1,2,4@2+;F2.2:1,4@1+;F2.1:4,1@1+;F3:2,3,4,1@0+;F3:2,3,4,1@1+;F2.2:1,4@0-;F2.1:1,4@0-;F2.1:1,4@0-;F2.2:1,4@1+;F4:1,2,4@0-",
      "4 0,0,2,1 K 2 0 F5.1:2,1,4@1-;F5.1:1,2,4@2-;F4:2,1,3@1+;F2.2:2,3@0+;F2.1:3,2@0-;F2.2:2,3@0-;F4:2,1,3@1-;F5.2:1,3,2@2-;F5.1:3,2,1@1-;F4:2,1,3@0-",
      "4 0,0,2,1 M 3 1 F1:1,4@1-;F4:1,3,4@1-;F5.2:2,1,3@0-;F5.1:3,1,4@3-;F2.2:1,3@2-;F2.1:1,3@2-;F2.2:1,3@2+;F4:3,1,4@3+;F1:3,4@3+;F5.2:2,3,1@1-;F4:1,2,3@0-",
      "4 0,0,2,1 M 3 2 F3:1,4,3,2@1+;F4:2,1,3@0-",
      "4 0,0,2,1 M 4 1 F3:1,4,2,3@0-;F3:2,3,4,1@1+;F4:1,2,4@0-",
      "4 0,0,2,1 M 4 2 F1:2,3@0-;F4:2,3,4@0+;F3:1,4,2,3@2-;F5.2:1,4,2@1+;F5.1:4,2,3@3-;F2.2:2,4@2-;F2.1:2,4@2-;F2.2:2,4@2+;F4:4,2,3@3+;F1:4,3@3+;F5.2:1,4,2@1-;F4:2,1,4@0-",
      "4 0,0,2,3 M 1 2 F1:2,3@2-;F4:2,1,3@2-;F2.2:1,2@1-;F3:1,2,3,4@5-;F2.1:1,2@0+;F2.2:1,2@0+;F4:2,1,3@1+;F1:2,3@1+;F5.1:1,2,3@1-",
      "4 0,0,2,3 M 1 3 F5.1:2,1,3@1+;F5.2:2,1,3@1+;F1:2,3@1-;F4:3,1,2@2-;F5.1:1,3,4@5-;F2.1:1,3@3+;F4:3,1,2@2+;F1:2,3@1+;F5.2:2,1,3@1-;F5.1:1,2,3@0+;F4:1,2,4@1+;F1:1,4@1+",
      "4 0,0,2,3 K 2 0 F4:2,1,3@4+;F5.1:2,3,4@3-;F2.2:2,3@2+;F2.1:3,2@2-;F2.2:2,3@2-;F4:2,3,4@3+;F1:2,4@3+;F5.1:3,2,4@3-;F4:2,1,3@2-",
      "4 0,0,2,3 K 3 0 F4:3,1,4@4+;F2.2:3,4@3+;F2.1:4,3@3-;F2.2:3,4@5-;F4:4,2,3@4-;F5.2:2,4,3@2-;F1:2,4@3+;F5.2:2,3,4@3-;F4:4,1,3@2-",
      "4 0,0,2,3 M 4 2 F5.1:2,1,3@1+;F1:2,1@2-;F4:1,2,4@3+;F5.2:3,4,1@4+;F5.1:3,1,4@3-;F5.1:4,1,2@5+;F3:1,2,3,4@4-;F5.2:2,3,1@2-;F5.1:1,2,3@3-;F6:3,4,1@4+;F4:1,2,3@1-;F2.1:1,2@0-;F2.2:1,2@1+;F2.1:2,1@1+",
      "4 0,0,2,3 M 4 3 F4:3,2,4@3-;F1:2,3@2+",
      "4 0,0,2,4 M 1 2 F1:2,3@2-;F4:2,1,3@2-;F2.2:1,2@1-;F2.1:1,2@0+;F2.2:1,2@0+;F4:2,1,3@1+;F1:2,3@1+;F5.1:1,2,3@1-",
      "4 0,0,2,4 M 1 4 F4:1,2,4@0+;F3:2,3,4,1@1-;F3:1,4,2,3@0+;F1:1,4@1+",
      "4 0,0,2,4 K 2 0 F4:2,1,3@3+;F2.2:2,3@2+;F2.1:3,2@2-;F2.2:2,3@2-;F4:2,1,3@3-;F5.2:1,3,2@4-;F5.1:3,2,1@3-;F4:2,1,3@2-",
      "4 0,0,2,4 M 3 2 F4:2,1,3@2-",
      "4 0,0,2,4 M 3 4 ",
      "4 0,0,2,4 K 4 0 F3:2,3,4,1@2+;F3:1,4,2,3@3-",
      "4 0,0,3,0 M 1 3 F4:1,2,3@0+;F5.2:3,2,1@1-;F5.1:2,1,3@0-;F5.2:3,1,2@2-;F5.1:1,2,3@1-;F5.1:1,4,3@5+;F5.1:4,1,3@4+;F1:1,3@2+;F5.1:4,1,3@2-;F5.1:1,4,3@3-",
      "4 0,0,3,0 M 2 3 F4:2,1,3@2+;F3:3,2,4,1@3+;F3:2,3,4,1@2+;F3:1,4,2,3@5+;F1:2,3@3+;F3:1,4,2,3@3-",
      "4 0,0,3,0 K 3 0 F5.2:3,1,4@5+;F5.1:1,4,3@6+;F5.2:3,4,1@4+;F5.1:4,1,3@5+",
      "4 0,0,3,0 M 4 3 F4:4,1,3@4+;F1:4,3@4+",
      "4 0,0,3,1 K 1 0 F4:1,2,4@3+;F2.2:1,4@2+;F2.1:4,1@2-;F2.2:1,4@2-;F5.1:1,2,4@1+;F5.1:2,1,4@0+;F2.2:1,4@4-;F2.2:1,4@3+;F5.2:4,1,2@2+;F5.2:4,2,1@1+;F4:1,2,4@0-",
      "4 0,0,3,1 M 2 1 F1:1,4@2-;F4:1,2,4@2-;F2.2:1,2@1+;F2.1:2,1@0+;F2.2:1,2@0-;F4:1,2,4@1+;F1:1,4@1+;F5.1:2,1,4@1-",
      "4 0,0,3,1 M 2 3 F3:1,4,2,3@2+;F4:2,1,3@0+;F1:2,3@0+",
      "4 0,0,3,1 K 3 0 F5.1:3,1,4@2-;F5.1:1,3,4@3-",
      "4 0,0,3,1 M 4 1 F5.1:1,2,4@1+;F5.1:2,1,4@0+;F5.2:4,1,2@2+;F5.2:4,2,1@1+;F4:1,2,4@0-",
      "4 0,0,3,1 M 4 3 ",
      "4 0,0,3,2 M 1 2 F1:2,4@2-;F4:2,1,4@2-;F2.2:1,2@1-;F2.1:1,2@0+;F2.2:1,2@0+;F4:2,1,4@1+;F1:2,4@1+;F5.1:1,2,4@1-",
      "4 0,0,3,2 M 1 3 F3:1,3,2,4@2-;F4:1,2,3@0+;F1:1,3@0+",
      "4 0,0,3,2 K 2 0 F4:2,1,4@3+;F2.2:2,4@2+;F2.1:4,2@2-;F2.2:2,4@2-;F4:2,1,4@3-;F5.2:1,4,2@4-;F5.1:4,2,1@3-;F4:2,1,4@2-",
      "4 0,0,3,2 K 3 0 F3:2,4,3,1@2+;F3:1,3,2,4@3-",
      "4 0,0,3,2 M 4 2 F4:2,1,4@2-",
      "4 0,0,3,2 M 4 3 ",
      "4 0,0,3,4 M 1 3 F4:1,2,3@0+;F5.2:3,2,1@1-;F5.1:2,1,3@0-;F5.1:1,2,3@3+;F1:2,3@1+;F5.1:1,2,3@1-",
      "4 0,0,3,4 M 1 4 F4:1,2,4@0+;F5.2:4,2,1@1-;F5.1:2,1,4@0-;F5.1:1,2,4@3+;F1:2,4@1+;F5.1:1,2,4@1-",
      "4 0,0,3,4 M 2 3 F4:2,1,3@2+;F1:2,3@2+",
      "4 0,0,3,4 M 2 4 F4:2,1,4@2+;F1:2,4@2+",
      "4 0,0,3,4 K 3 0 ",
      "4 0,0,3,4 K 4 0 ",
      "4 0,0,4,0 M 1 4 F4:1,2,4@0+;F5.2:4,2,1@1-;F5.1:2,1,4@0-;F5.2:4,1,2@2-;F5.1:1,2,4@1-;F1:4,3@4-;F4:4,1,3@4-;F2.2:1,4@3-;F2.1:1,4@2+;F2.2:1,4@2+;F4:4,1,3@3+;F1:4,3@3+;F5.1:1,4,3@3-",
      "4 0,0,4,0 M 2 4 F4:2,1,4@2+;F1:4,3@4-;F4:4,2,3@4-;F2.2:2,4@3-;F2.1:2,4@2+;F2.2:2,4@2+;F4:4,2,3@3+;F1:4,3@3+;F5.1:2,4,3@3-;F4:4,1,2@2-",
      "4 0,0,4,0 M 3 4 F4:4,1,3@4-",
      "4 0,0,4,0 K 4 0 F4:4,1,3@5+;F2.2:3,4@4-;F2.1:3,4@4-;F2.2:3,4@5+;F4:4,1,3@6-;F4:3,1,4@4-",
      "4 0,0,4,1 K 1 0 F4:1,2,4@4+;F5.1:1,4,3@3-;F2.2:1,4@2+;F2.1:4,1@2-;F2.2:1,4@2-;F5.1:1,2,4@1+;F5.1:2,1,4@0+;F4:1,3,4@3-;F1:1,3@3+;F5.1:4,1,3@3-;F5.2:4,1,2@2+;F5.2:4,2,1@1+;F4:1,2,4@0-",
      "4 0,0,4,1 M 2 1 F1:1,4@2-;F4:1,2,4@2-;F2.2:1,2@1+;F3:2,1,4,3@5-;F2.1:2,1@0+;F2.2:1,2@0-;F4:1,2,4@1+;F1:1,4@1+;F5.1:2,1,4@1-",
      "4 0,0,4,1 M 2 4 F5.1:2,4,3@3-;F5.2:1,2,4@2-;F5.1:1,2,4@2-;F1:1,4@3-;F4:1,2,4@3-;F2.1:1,2@1+;F4:1,2,4@2+;F1:1,4@2+;F3:1,4,2,3@2+;F4:2,1,3@0+;F1:2,3@0+",
      "4 0,0,4,1 M 3 1 F5.1:1,2,4@1+;F1:2,4@1-;F5.1:1,2,4@3-;F5.1:2,1,4@0+;F5.2:4,2,1@1+;F4:1,2,4@0-",
      "4 0,0,4,1 M 3 4 F4:4,1,3@3-;F1:1,4@2+",
      "4 0,0,4,1 K 4 0 F4:4,1,3@4+;F2.2:3,4@3-;F2.1:3,4@3-;F2.2:3,4@5+;F4:3,1,4@4-;F5.2:1,3,4@2-;F1:1,3@3+;F5.2:1,4,3@3-;F4:3,1,4@2-",
      "4 0,0,4,2 M 1 2 F1:2,4@2-;F4:2,1,4@2-;F2.2:1,2@1-;F3:1,2,4,3@5-;F2.1:1,2@0+;F2.2:1,2@0+;F4:2,1,4@1+;F1:2,4@1+;F5.1:1,2,4@1-",
      "4 0,0,4,2 M 1 4 F5.1:1,4,3@3-;F5.2:2,1,4@2-;F5.1:2,1,4@2-;F1:2,4@3-;F4:2,1,4@3-;F2.1:2,1@1+;F4:2,1,4@2+;F1:2,4@2+;F3:1,3,2,4@2-;F4:1,2,3@0+;F1:1,3@0+",
      "4 0,0,4,2 K 2 0 F4:2,1,4@4+;F5.1:2,4,3@3-;F2.2:2,4@2+;F2.1:4,2@2-;F2.2:2,4@2-;F4:2,3,4@3-;F1:2,3@3+;F5.1:4,2,3@3-;F4:2,1,4@2-",
      "4 0,0,4,2 M 3 2 F5.1:2,1,4@1+;F1:2,1@2-;F4:1,2,3@3+;F5.2:4,3,1@4+;F5.1:4,1,3@3-;F5.2:2,4,1@2-;F4:1,2,4@1-;F5.1:3,1,2@5+;F3:1,2,4,3@4-;F5.1:1,2,4@3-;F2.1:1,2@0-;F2.2:1,2@1+;F2.1:2,1@1+",
      "4 0,0,4,2 M 3 4 F4:4,2,3@3-;F1:2,4@2+",
      "4 0,0,4,2 K 4 0 F4:4,1,3@4+;F2.2:3,4@3-;F2.1:3,4@3-;F2.2:3,4@5+;F4:3,2,4@4-;F5.2:2,3,4@2-;F1:2,3@3+;F5.2:2,4,3@3-;F4:3,1,4@2-",
      "4 0,0,4,3 M 1 3 F4:1,2,4@0+;F5.2:4,2,1@1-;F5.1:2,1,4@0-;F5.2:4,1,2@2-;F4:3,1,4@6+;F1:4,3@5+;F5.1:1,2,4@1-;F1:1,4@2+",
      "4 0,0,4,3 M 1 4 F6:3,4,1@4-;F5.1:1,2,3@3+;F4:4,1,3@6+;F1:3,4@5+;F5.1:2,1,3@2+;F4:1,2,3@0+;F1:1,3@0+;F5.1:2,1,3@0-;F5.1:1,2,3@1-",
      "4 0,0,4,3 M 2 3 F2.2:1,2@1-;F2.1:1,2@0+;F2.1:1,2@0+;F5.1:1,2,4@1+;F5.2:1,2,4@1+;F5.1:2,3,1@4-;F5.2:4,2,3@3-;F5.1:4,2,3@3-;F3:2,1,4,3@4-;F4:2,1,4@2-;F1:2,1@2+;F5.1:2,1,4@1-",
      "4 0,0,4,3 M 2 4 F2.2:1,2@1-;F6:3,4,1@4-;F5.1:2,4,1@6-;F5.2:3,2,4@5-;F5.1:3,2,4@5-;F3:2,1,3,4@6-;F2.1:1,2@0+;F2.1:1,2@0+;F5.1:1,2,3@1+;F5.2:1,3,2@2-;F5.1:2,1,3@3-;F4:2,1,3@1-;F1:1,2@0+",
      "4 0,0,4,3 K 3 0 F2.2:1,2@1-;F2.2:1,2@2+;F2.1:3,1@6-;F2.2:1,3@7-;F2.1:1,3@7+;F4:3,1,4@6+;F1:4,3@5+;F5.2:4,1,3@5-;F5.1:4,1,3@5-;F4:1,2,4@4-;F1:2,1@3+;F2.2:1,2@2-;F2.2:1,2@1+",
      "4 0,0,4,3 K 4 0 F6:3,4,1@4-;F2.1:4,1@6-;F2.2:1,4@7-;F2.1:1,4@7+;F4:4,1,3@6+;F1:3,4@5+;F5.2:3,1,4@5-;F5.1:3,1,4@5-;F5.1:1,2,3@3+;F5.2:3,1,2@4+;F5.1:2,1,3@2+;F5.2:3,2,1@3+;F4:1,2,3@2-;F1:1,2@0+",
      "4 0,1,0,0 K 1 0 F2.2:1,2@4+;F2.1:2,1@4+;F5.2:2,1,4@3+;F5.2:2,4,1@2+;F5.2:2,1,3@1+;F5.2:2,1,4@4+;F5.2:2,4,1@3+;F5.2:2,1,3@2+;F5.2:2,3,1@0+;F5.2:2,3,1@1+;F2.2:1,2@0-;F2.1:1,2@0-;F2.1:1,2@0-;F2.2:1,2@1+",
      "4 0,1,0,0 M 2 1 F5.1:1,4,2@3+;F5.1:4,1,2@2+;F5.2:2,1,4@4+;F5.2:2,4,1@3+;F5.1:1,3,2@1+;F5.2:2,1,3@2+;F5.1:3,1,2@0+;F5.2:2,3,1@1+",
      "4 0,1,0,0 M 3 1 F5.1:1,4,2@3+;F5.1:4,1,2@2+;F1:1,2@2-;F4:1,2,3@2+;F2.2:1,3@1+;F2.1:3,1@0+;F2.2:1,3@0-;F4:1,2,3@1-;F1:1,2@1+;F5.1:4,1,2@1-;F5.1:1,4,2@2-;F5.1:3,1,2@3-;F5.2:3,1,4@2+;F5.2:3,4,1@1+;F4:1,2,3@0-",
      "4 0,1,0,0 M 4 1 F1:1,2@4-;F4:1,2,4@4+;F2.2:1,4@3+;F2.1:4,1@2+;F2.2:1,4@2-;F4:1,2,4@3-;F1:1,2@3+;F5.1:4,1,2@3-;F5.1:1,3,4@1+;F5.2:4,1,3@2+;F5.1:3,1,4@0+;F5.2:4,3,1@1+;F4:1,2,4@0-",
      "4 0,1,0,2 K 1 0 F5.1:1,2,4@3-;F2.2:1,2@2+;F2.1:2,1@2-;F2.2:1,2@2-;F4:1,2,4@3+;F1:1,4@3+;F5.1:2,1,4@3-;F5.1:1,3,2@1+;F5.2:2,1,3@2+;F5.1:3,1,2@0+;F5.2:2,3,1@1+",
      "4 0,1,0,2 K 2 0 F4:2,1,4@4+;F2.2:2,4@3+;F2.1:4,2@3-;F2.2:2,4@5-;F4:4,1,2@4-;F5.2:1,4,2@2-;F1:1,4@3+;F5.2:1,2,4@3-;F4:4,1,2@2-",
      "4 0,1,0,2 M 3 1 F1:1,2@2-;F4:1,2,3@2+;F2.2:1,3@1+;F3:2,4,3,1@5+;F2.1:3,1@0+;F2.2:1,3@0-;F4:1,2,3@1-;F1:1,2@1+;F5.1:3,1,2@1-;F4:1,2,3@0-",
      "4 0,1,0,2 M 3 2 F5.1:1,3,2@1+;F5.2:1,3,2@1+;F1:1,2@1-;F4:2,1,3@2+;F5.1:3,2,4@5-;F2.1:3,2@3+;F4:2,1,3@2-;F1:1,2@1+;F5.2:1,3,2@1-;F5.1:3,1,2@0+;F4:3,1,4@1+;F1:3,4@1+",
      "4 0,1,0,2 M 4 1 F1:1,2@2-;F5.1:1,3,2@1+;F6:2,4,1@4+;F5.2:2,1,3@2+;F5.1:3,1,2@0+;F5.2:2,3,1@1+",
      "4 0,1,0,2 M 4 2 F4:2,1,4@3-;F1:1,2@2+",
      "4 0,1,0,3 K 1 0 F3:1,2,3,4@1-;F2.2:1,2@0+;F2.1:2,1@0-;F2.2:1,2@0-;F3:2,1,3,4@3-;F2.2:1,2@2-;F2.2:1,2@1+",
      "4 0,1,0,3 M 2 1 F3:2,1,3,4@1-",
      "4 0,1,0,3 M 2 3 F1:3,4@1-;F4:3,2,4@1-;F5.2:1,3,2@0-;F5.1:2,3,4@3-;F2.2:2,3@2+;F2.1:3,2@2-;F2.2:2,3@2-;F4:2,3,4@3+;F1:2,4@3+;F5.2:1,2,3@1-;F4:3,1,2@0-",
      "4 0,1,0,3 K 3 0 F3:1,2,3,4@0+;F5.1:3,1,2@1-;F5.1:1,3,2@2-;F4:3,1,4@1+;F2.2:3,4@0+;F2.1:4,3@0-;F2.2:3,4@0-;F4:3,1,4@1-;F5.2:1,4,3@2-;F5.1:4,3,1@1-;F4:3,1,4@0-",
      "4 0,1,0,3 M 4 1 F1:1,2@0-;F4:1,2,4@0+;F3:1,2,3,4@2+;F5.2:3,4,1@1+;F5.1:4,1,2@3-;F2.2:1,4@2-;F2.1:1,4@2-;F2.2:1,4@2+;F4:4,1,2@3+;F1:4,2@3+;F5.2:3,4,1@1-;F4:1,2,4@0-",
      "4 0,1,0,3 M 4 3 F3:1,2,3,4@0+;F3:1,2,4,3@1+;F4:3,1,4@0-",
      "4 0,1,0,4 K 1 0 F2.2:1,2@2+;F2.1:2,1@2+;F5.2:2,1,3@1+;F5.2:2,3,1@0+;F5.2:2,1,3@2+;F5.2:2,3,1@1+;F2.2:1,2@0-;F2.1:1,2@0-;F2.1:1,2@0-;F2.2:1,2@1+",
      "4 0,1,0,4 M 2 1 F5.1:1,3,2@1+;F5.2:2,1,3@2+;F5.1:3,1,2@0+;F5.2:2,3,1@1+",
      "4 0,1,0,4 M 2 4 ",
      "4 0,1,0,4 M 3 1 F1:1,2@2-;F4:1,2,3@2+;F2.2:1,3@1+;F2.1:3,1@0+;F2.2:1,3@0-;F4:1,2,3@1-;F1:1,2@1+;F5.1:3,1,2@1-;F4:1,2,3@0-",
      "4 0,1,0,4 M 3 4 F4:3,1,4@0+;F3:1,2,4,3@1-;F3:1,2,3,4@0-;F1:3,4@1+",
      "4 0,1,0,4 K 4 0 F5.1:4,1,2@2-;F5.1:1,4,2@3-",
      "4 0,1,2,0 K 1 0 F5.1:1,2,3@3-;F2.2:1,2@2+;F2.1:2,1@2-;F2.2:1,2@2-;F4:1,2,3@3+;F1:1,3@3+;F5.1:2,1,3@3-;F5.1:1,4,2@1+;F5.2:2,1,4@2+;F5.1:4,1,2@0+;F5.2:2,4,1@1+",
      "4 0,1,2,0 K 2 0 F4:2,1,3@4+;F2.2:2,3@3+;F5.2:1,3,2@2-;F2.1:3,2@4-;F2.2:2,3@5-;F4:3,1,2@4-;F1:1,3@3+;F5.2:1,2,3@3-;F3:1,4,3,2@1+;F3:1,4,2,3@2+;F3:3,2,4,1@0-;F3:2,3,4,1@1-;F4:3,1,2@0-",
      "4 0,1,2,0 M 3 1 F1:1,2@2-;F5.1:1,4,2@1+;F6:2,3,1@4+;F5.2:2,1,4@2+;F5.1:4,1,2@0+;F5.2:2,4,1@1+",
      "4 0,1,2,0 M 3 2 F4:2,1,3@3-;F1:1,2@2+",
      "4 0,1,2,0 M 4 1 F1:1,2@2-;F4:1,2,4@2+;F2.2:1,4@1+;F3:2,3,4,1@5+;F2.1:4,1@0+;F2.2:1,4@0-;F4:1,2,4@1-;F1:1,2@1+;F5.1:4,1,2@1-;F4:1,2,4@0-",
      "4 0,1,2,0 M 4 2 F5.1:1,4,2@1+;F5.2:1,4,2@1+;F1:1,2@1-;F4:2,1,4@2+;F5.1:4,2,3@5-;F2.1:4,2@3+;F4:2,1,4@2-;F1:1,2@1+;F5.2:1,4,2@1-;F5.1:4,1,2@0+;F4:4,1,3@1+;F1:4,3@1+",
      "4 0,1,2,3 K 1 0 F3:1,2,3,4@2-;F5.1:1,2,3@1-;F1:1,3@2-;F3:2,1,3,4@5-;F4:1,2,3@2-;F2.1:1,2@0+;F4:1,2,3@1+;F1:1,3@1+;F5.1:2,1,3@1-",
      "4 0,1,2,3 K 2 0 F4:2,1,3@3+;F5.1:2,3,4@2-;F2.2:2,3@1+;F2.1:3,2@1-;F2.2:2,3@1-;F4:2,3,4@2+;F1:2,4@2+;F5.1:3,2,4@2-;F4:2,1,3@1-;F1:1,2@0+",
      "4 0,1,2,3 K 3 0 F4:3,1,4@3+;F2.2:3,4@2+;F2.1:4,3@2-;F2.2:3,4@4-;F4:4,2,3@3-;F5.2:2,4,3@1-;F1:2,4@2+;F5.2:2,3,4@2-;F3:1,2,4,3@0+;F3:1,2,3,4@1+;F4:4,1,3@0-",
      "4 0,1,2,3 M 4 1 F1:1,2@0-;F4:1,2,3@0+;F6:1,2,3@1+;F7:3,4,2,1@2-;F4:3,1,2@1-;F4:1,2,3@0-",
      "4 0,1,2,3 M 4 2 F7:3,4,1,2@0-;F6:3,4,1@0+",
      "4 0,1,2,3 M 4 3 F4:3,2,4@2-;F1:2,3@1+",
      "4 0,1,2,4 K 1 0 F5.1:1,2,3@1-;F1:1,3@2-;F4:1,2,3@2-;F2.1:1,2@0+;F4:1,2,3@1+;F1:1,3@1+;F5.1:2,1,3@1-",
      "4 0,1,2,4 K 2 0 F4:2,1,3@2+;F2.2:2,3@1+;F2.1:3,2@1-;F2.2:2,3@3-;F4:3,1,2@2-;F5.2:1,3,2@0-;F1:1,3@1+;F5.2:1,2,3@1-;F4:3,1,2@0-",
      "4 0,1,2,4 M 3 1 F1:1,2@0-;F6:2,3,1@2+",
      "4 0,1,2,4 M 3 2 F4:2,1,3@1-;F1:1,2@0+",
      "4 0,1,2,4 M 3 4 ",
      "4 0,1,2,4 K 4 0 F3:2,3,4,1@1+;F3:1,4,2,3@2-;F5.1:4,1,2@0-;F5.1:1,4,2@1-",
      "4 0,1,3,0 K 1 0 F2.2:1,2@2+;F2.1:2,1@2+;F5.2:2,1,4@1+;F5.2:2,4,1@0+;F5.2:2,1,4@2+;F5.2:2,4,1@1+;F2.2:1,2@0-;F2.1:1,2@0-;F2.1:1,2@0-;F2.2:1,2@1+",
      "4 0,1,3,0 M 2 1 F5.1:1,4,2@1+;F5.2:2,1,4@2+;F5.1:4,1,2@0+;F5.2:2,4,1@1+",
      "4 0,1,3,0 M 2 3 ",
      "4 0,1,3,0 K 3 0 F5.1:3,1,2@2-;F5.1:3,1,4@1-;F5.2:4,3,1@0-;F5.1:1,3,2@3-;F5.1:1,3,4@2-;F5.2:4,1,3@1-",
      "4 0,1,3,0 M 4 1 F1:1,2@2-;F4:1,2,4@2+;F2.2:1,4@1+;F2.1:4,1@0+;F2.2:1,4@0-;F4:1,2,4@1-;F1:1,2@1+;F5.1:4,1,2@1-;F4:1,2,4@0-",
      "4 0,1,3,0 M 4 3 F4:4,1,3@0+;F3:1,2,3,4@1-;F3:1,2,4,3@0-;F1:4,3@1+",
      "4 0,1,3,2 K 1 0 F5.1:1,2,4@1-;F1:1,4@2-;F4:1,2,4@2-;F2.1:1,2@0+;F4:1,2,4@1+;F1:1,4@1+;F5.1:2,1,4@1-",
      "4 0,1,3,2 K 2 0 F4:2,1,4@2+;F2.2:2,4@1+;F2.1:4,2@1-;F2.2:2,4@3-;F4:4,1,2@2-;F5.2:1,4,2@0-;F1:1,4@1+;F5.2:1,2,4@1-;F4:4,1,2@0-",
      "4 0,1,3,2 K 3 0 F3:2,4,3,1@1+;F3:1,3,2,4@2-;F5.1:3,1,2@0-;F5.1:1,3,2@1-",
      "4 0,1,3,2 M 4 1 F1:1,2@0-;F6:2,4,1@2+",
      "4 0,1,3,2 M 4 2 F4:2,1,4@1-;F1:1,2@0+",
      "4 0,1,3,2 M 4 3 ",
      "4 0,1,3,4 K 1 0 F2.2:1,2@0+;F2.1:2,1@0-;F2.2:1,2@0-;F2.2:1,2@2-;F2.2:1,2@1+",
      "4 0,1,3,4 M 2 1 ",
      "4 0,1,3,4 M 2 3 ",
      "4 0,1,3,4 M 2 4 ",
      "4 0,1,3,4 K 3 0 F5.1:3,1,2@0-;F5.1:1,3,2@1-",
      "4 0,1,3,4 K 4 0 F5.1:4,1,2@0-;F5.1:1,4,2@1-",
      "4 0,1,4,0 K 1 0 F3:1,2,4,3@1-;F2.2:1,2@0+;F2.1:2,1@0-;F2.2:1,2@0-;F3:2,1,4,3@3-;F2.2:1,2@2-;F2.2:1,2@1+",
      "4 0,1,4,0 M 2 1 F3:2,1,4,3@1-",
      "4 0,1,4,0 M 2 4 F1:4,3@1-;F4:4,2,3@1-;F5.2:1,4,2@0-;F5.1:2,4,3@3-;F2.2:2,4@2+;F2.1:4,2@2-;F2.2:2,4@2-;F4:2,3,4@3-;F1:2,3@3+;F5.2:1,2,4@1-;F4:4,1,2@0-",
      "4 0,1,4,0 M 3 1 F1:1,2@0-;F4:1,2,3@0+;F3:1,2,4,3@2+;F5.2:4,3,1@1+;F5.1:3,1,2@3-;F2.2:1,3@2-;F2.1:1,3@2-;F2.2:1,3@2+;F4:3,1,2@3+;F1:3,2@3+;F5.2:4,3,1@1-;F4:1,2,3@0-",
      "4 0,1,4,0 M 3 4 F3:1,2,4,3@0+;F3:1,2,3,4@1+;F4:4,1,3@0-",
      "4 0,1,4,0 K 4 0 F3:1,2,4,3@0+;F5.1:4,1,2@1-;F5.1:1,4,2@2-;F4:4,1,3@1+;F2.2:3,4@0-;F2.1:3,4@0-;F2.2:3,4@1+;F4:4,1,3@2-;F4:3,1,4@0-",
      "4 0,1,4,2 K 1 0 F3:1,2,4,3@2-;F5.1:1,2,4@1-;F1:1,4@2-;F3:2,1,4,3@5-;F4:1,2,4@2-;F2.1:1,2@0+;F4:1,2,4@1+;F1:1,4@1+;F5.1:2,1,4@1-",
      "4 0,1,4,2 K 2 0 F4:2,1,4@3+;F5.1:2,4,3@2-;F2.2:2,4@1+;F2.1:4,2@1-;F2.2:2,4@1-;F4:2,3,4@2-;F1:2,3@2+;F5.1:4,2,3@2-;F4:2,1,4@1-;F1:1,2@0+",
      "4 0,1,4,2 M 3 1 F1:1,2@0-;F4:1,2,4@0+;F6:1,2,4@1+;F7:4,3,2,1@2-;F4:4,1,2@1-;F4:1,2,4@0-",
      "4 0,1,4,2 M 3 2 F7:4,3,1,2@0-",
      "4 0,1,4,2 M 3 4 F4:4,2,3@2-;F1:2,4@1+",
      "4 0,1,4,2 K 4 0 F4:4,1,3@3+;F2.2:3,4@2-;F2.1:3,4@2-;F2.2:3,4@4+;F4:3,2,4@3-;F5.2:2,3,4@1-;F1:2,3@2+;F5.2:2,4,3@2-;F3:1,2,3,4@0+;F3:1,2,4,3@1+;F4:3,1,4@0-",
      "4 0,1,4,3 K 1 0 F2.1:1,2@3-;F4:1,2,3@5+;F5.1:1,2,3@4+;F7:1,2,4,3@1-;F3:1,2,4,3@4-;F5.1:1,2,4@3-;F2.1:1,2@2-;F2.2:1,2@2+;F4:1,2,4@0-;F2.1:2,1@1+",
      "4 0,1,4,3 M 2 1 F7:4,3,1,2@0+;F7:4,3,2,1@1+",
      "4 0,1,4,3 M 2 3 F7:1,2,4,3@1-;F4:1,2,4@0-;F1:1,2@0+",
      "4 0,1,4,3 M 2 4 F6:3,4,1@0-;F7:3,4,1,2@0+;F4:4,2,3@3+;F1:3,4@2+",
      "4 0,1,4,3 K 3 0 F7:4,3,1,2@0+;F4:3,1,2@4+;F2.1:3,2@3-;F2.2:2,3@4-;F2.1:2,3@4+;F4:3,2,4@3+;F1:4,3@2+;F5.2:4,2,3@2-;F5.1:4,2,3@2-;F4:2,1,4@1-;F1:1,2@0+",
      "4 0,1,4,3 K 4 0 F6:3,4,1@0-;F7:3,4,1,2@0+;F4:4,1,2@4+;F2.1:4,2@3-;F2.2:2,4@4-;F2.1:2,4@4+;F4:4,2,3@3+;F1:3,4@2+;F5.2:3,2,4@2-;F5.1:3,2,4@2-;F4:2,1,3@1-;F1:1,2@0+",
      "4 0,2,0,0 M 1 2 F5.1:1,4,2@5+;F5.1:4,1,2@4+;F5.1:1,3,2@3+;F5.1:3,1,2@2+;F1:1,2@0+;F5.1:3,1,2@0-;F5.1:1,3,2@1-;F5.1:4,1,2@2-;F5.1:1,4,2@3-",
      "4 0,2,0,0 K 2 0 F5.1:2,1,4@5-;F5.2:4,2,1@4-;F5.1:1,2,4@6-;F5.2:4,1,2@5-;F5.2:2,1,3@3+;F5.1:1,3,2@4+;F5.2:2,3,1@2+;F5.1:3,1,2@3+",
      "4 0,2,0,0 M 3 2 F4:3,1,2@2+;F3:2,3,4,1@3+;F3:3,2,4,1@2+;F3:1,4,3,2@5+;F1:3,2@3+;F3:1,4,3,2@3-",
      "4 0,2,0,0 M 4 2 F4:4,1,2@4+;F1:4,2@4+",
      "4 0,2,0,1 K 1 0 F4:1,2,4@3+;F2.2:1,4@2+;F2.1:4,1@2-;F2.2:1,4@2-;F5.1:1,3,4@1+;F5.1:3,1,4@0+;F2.2:1,4@4-;F2.2:1,4@3+;F5.2:4,1,3@2+;F5.2:4,3,1@1+;F4:1,2,4@0-",
      "4 0,2,0,1 K 2 0 F5.1:2,1,4@2-;F5.1:2,1,3@1-;F5.2:3,2,1@0-;F5.1:1,2,4@3-;F5.1:1,2,3@2-;F5.2:3,1,2@1-",
      "4 0,2,0,1 M 3 1 F1:1,4@2-;F4:1,3,4@2-;F2.2:1,3@1+;F2.1:3,1@0+;F2.2:1,3@0-;F4:1,3,4@1+;F1:1,4@1+;F5.1:3,1,4@1-;F4:1,2,3@0-",
      "4 0,2,0,1 M 3 2 F3:1,4,3,2@2+;F4:3,1,2@0+;F1:3,2@0+",
      "4 0,2,0,1 M 4 1 F5.1:1,3,4@1+;F5.1:3,1,4@0+;F5.2:4,1,3@2+;F5.2:4,3,1@1+;F4:1,2,4@0-",
      "4 0,2,0,1 M 4 2 ",
      "4 0,2,0,3 M 1 2 F3:1,2,3,4@2-;F1:1,2@0+",
      "4 0,2,0,3 M 1 3 F4:1,2,3@0+;F1:3,4@2-;F4:3,1,4@2-;F2.2:1,3@1-;F2.1:1,3@0+;F2.2:1,3@0+;F4:3,1,4@1+;F1:3,4@1+;F5.1:1,3,4@1-",
      "4 0,2,0,3 K 2 0 F3:2,1,3,4@2-;F3:1,2,3,4@3-",
      "4 0,2,0,3 K 3 0 F4:3,1,4@3+;F2.2:3,4@2+;F2.1:4,3@2-;F2.2:3,4@2-;F4:3,1,4@3-;F5.2:1,4,3@4-;F5.1:4,3,1@3-;F4:3,1,4@2-",
      "4 0,2,0,3 M 4 2 ",
      "4 0,2,0,3 M 4 3 F4:3,1,4@2-",
      "4 0,2,0,4 M 1 2 F5.1:1,3,2@3+;F5.1:3,1,2@2+;F1:1,2@0+;F5.1:3,1,2@0-;F5.1:1,3,2@1-",
      "4 0,2,0,4 M 1 4 F4:1,2,4@0+;F5.2:4,3,1@1-;F5.1:3,1,4@0-;F5.1:1,3,4@3+;F1:3,4@1+;F5.1:1,3,4@1-",
      "4 0,2,0,4 K 2 0 F5.2:2,1,3@3+;F5.1:1,3,2@4+;F5.2:2,3,1@2+;F5.1:3,1,2@3+",
      "4 0,2,0,4 M 3 2 F4:3,1,2@2+;F1:3,2@2+",
      "4 0,2,0,4 M 3 4 F4:3,1,4@2+;F1:3,4@2+",
      "4 0,2,0,4 K 4 0 ",
      "4 0,2,1,0 K 1 0 F4:1,2,3@3+;F2.2:1,3@2+;F2.1:3,1@2+;F5.2:3,1,4@1+;F5.2:3,4,1@0+;F5.2:3,1,4@2+;F5.2:3,4,1@1+;F2.2:1,3@0-;F2.1:1,3@0-;F2.1:1,3@0-;F2.2:1,3@1+;F4:1,2,3@0-",
      "4 0,2,1,0 K 2 0 F5.1:2,1,3@2-;F5.1:2,1,4@1-;F5.2:4,2,1@0-;F5.1:1,2,3@3-;F5.1:1,2,4@2-;F5.2:4,1,2@1-",
      "4 0,2,1,0 M 3 1 F5.1:1,4,3@1+;F5.1:4,1,3@0+;F5.2:3,1,4@2+;F5.2:3,4,1@1+;F4:1,2,3@0-",
      "4 0,2,1,0 M 3 2 ",
      "4 0,2,1,0 M 4 1 F1:1,3@2-;F4:1,3,4@2+;F2.2:1,4@1+;F2.1:4,1@0+;F2.2:1,4@0-;F4:1,3,4@1-;F1:1,3@1+;F5.1:4,1,3@1-;F4:1,2,4@0-",
      "4 0,2,1,0 M 4 2 F3:1,3,4,2@2+;F4:4,1,2@0+;F1:4,2@0+",
      "4 0,2,1,3 K 1 0 F4:1,2,3@2+;F5.1:1,3,4@1-;F1:1,4@2-;F4:1,3,4@2-;F2.1:1,3@0+;F4:1,3,4@1+;F1:1,4@1+;F5.1:3,1,4@1-;F4:1,2,3@0-",
      "4 0,2,1,3 K 2 0 F3:2,1,3,4@1-;F3:1,2,3,4@2-;F5.1:2,1,3@0-;F5.1:1,2,3@1-",
      "4 0,2,1,3 K 3 0 F4:3,1,4@2+;F2.2:3,4@1+;F2.1:4,3@1-;F2.2:3,4@3-;F4:4,1,3@2-;F5.2:1,4,3@0-;F1:1,4@1+;F5.2:1,3,4@1-;F4:4,1,3@0-",
      "4 0,2,1,3 M 4 1 F1:1,3@0-;F4:1,2,3@0-;F6:3,4,1@2+",
      "4 0,2,1,3 M 4 2 ",
      "4 0,2,1,3 M 4 3 F4:3,1,4@1-;F1:1,3@0+",
      "4 0,2,1,4 K 1 0 F4:1,2,3@1+;F2.2:1,3@0+;F2.1:3,1@0-;F2.2:1,3@0-;F2.2:1,3@2-;F2.2:1,3@1+;F4:1,2,3@0-",
      "4 0,2,1,4 K 2 0 F5.1:2,1,3@0-;F5.1:1,2,3@1-",
      "4 0,2,1,4 M 3 1 F4:1,2,3@0-",
      "4 0,2,1,4 M 3 2 ",
      "4 0,2,1,4 M 3 4 ",
      "4 0,2,1,4 K 4 0 F5.1:4,1,3@0-;F5.1:1,4,3@1-",
      "4 0,2,3,0 M 1 2 F5.1:1,4,2@3+;F5.1:4,1,2@2+;F1:1,2@0+;F5.1:4,1,2@0-;F5.1:1,4,2@1-",
      "4 0,2,3,0 M 1 3 F4:1,2,3@0+;F5.2:3,4,1@1-;F5.1:4,1,3@0-;F5.1:1,4,3@3+;F1:4,3@1+;F5.1:1,4,3@1-",
      "4 0,2,3,0 K 2 0 F5.2:2,1,4@3+;F5.1:1,4,2@4+;F5.2:2,4,1@2+;F5.1:4,1,2@3+",
      "4 0,2,3,0 K 3 0 F5.2:3,1,4@3+;F5.1:1,4,3@4+;F5.2:3,4,1@2+;F5.1:4,1,3@3+",
      "4 0,2,3,0 M 4 2 F4:4,1,2@2+;F1:4,2@2+",
      "4 0,2,3,0 M 4 3 F4:4,1,3@2+;F1:4,3@2+",
      "4 0,2,3,1 K 1 0 F4:1,2,4@1+;F2.2:1,4@0+;F2.1:4,1@0-;F2.2:1,4@0-;F2.2:1,4@2-;F2.2:1,4@1+;F4:1,2,4@0-",
      "4 0,2,3,1 K 2 0 F5.1:2,1,4@0-;F5.1:1,2,4@1-",
      "4 0,2,3,1 K 3 0 F5.1:3,1,4@0-;F5.1:1,3,4@1-",
      "4 0,2,3,1 M 4 1 F4:1,2,4@0-",
      "4 0,2,3,1 M 4 2 ",
      "4 0,2,3,1 M 4 3 ",
      "4 0,2,3,4 M 1 2 F1:1,2@0+",
      "4 0,2,3,4 M 1 3 F4:1,2,3@0+;F1:1,3@0+",
      "4 0,2,3,4 M 1 4 F4:1,2,4@0+;F1:1,4@0+",
      "4 0,2,3,4 K 2 0 ",
      "4 0,2,3,4 K 3 0 ",
      "4 0,2,3,4 K 4 0 ",
      "4 0,2,4,0 M 1 2 F3:1,2,4,3@2-;F1:1,2@0+",
      "4 0,2,4,0 M 1 4 F4:1,2,4@0+;F1:4,3@2-;F4:4,1,3@2-;F2.2:1,4@1-;F2.1:1,4@0+;F2.2:1,4@0+;F4:4,1,3@1+;F1:4,3@1+;F5.1:1,4,3@1-",
      "4 0,2,4,0 K 2 0 F3:2,1,4,3@2-;F3:1,2,4,3@3-",
      "4 0,2,4,0 M 3 2 ",
      "4 0,2,4,0 M 3 4 F4:4,1,3@2-",
      "4 0,2,4,0 K 4 0 F4:4,1,3@3+;F2.2:3,4@2-;F2.1:3,4@2-;F2.2:3,4@3+;F4:4,1,3@4-;F4:3,1,4@2-",
      "4 0,2,4,1 K 1 0 F4:1,2,4@2+;F5.1:1,4,3@1-;F1:1,3@2-;F4:1,3,4@2+;F2.1:1,4@0+;F4:1,3,4@1-;F1:1,3@1+;F5.1:4,1,3@1-;F4:1,2,4@0-",
      "4 0,2,4,1 K 2 0 F3:2,1,4,3@1-;F3:1,2,4,3@2-;F5.1:2,1,4@0-;F5.1:1,2,4@1-",
      "4 0,2,4,1 M 3 1 F1:1,4@0-;F4:1,2,4@0-",
      "4 0,2,4,1 M 3 2 ",
      "4 0,2,4,1 M 3 4 F4:4,1,3@1-;F1:1,4@0+",
      "4 0,2,4,1 K 4 0 F4:4,1,3@2+;F2.2:3,4@1-;F2.1:3,4@1-;F2.2:3,4@3+;F4:3,1,4@2-;F5.2:1,3,4@0-;F1:1,3@1+;F5.2:1,4,3@1-;F4:3,1,4@0-",
      "4 0,2,4,3 M 1 2 F4:1,2,4@0+;F1:1,4@0+",
      "4 0,2,4,3 M 1 3 F4:3,1,4@4+;F1:4,3@3+;F4:1,2,4@0+;F1:1,4@0+",
      "4 0,2,4,3 M 1 4 F4:1,2,3@0+;F6:3,4,1@2-;F4:4,1,3@4+;F1:3,4@3+;F1:1,3@0+",
      "4 0,2,4,3 K 2 0 F5.2:3,2,1@4-;F3:2,1,4,3@3-;F5.2:3,1,2@5-;F3:1,2,4,3@4-;F5.1:2,1,4@2-;F5.1:1,2,4@3-",
      "4 0,2,4,3 K 3 0 F2.1:3,1@4-;F2.2:1,3@5-;F2.1:1,3@5+;F4:3,1,4@4+;F1:4,3@3+;F5.2:4,1,3@3-;F5.1:4,1,3@3-;F4:1,2,4@2-;F1:1,2@0+",
      "4 0,2,4,3 K 4 0 F6:3,4,1@2-;F2.1:4,1@4-;F2.2:1,4@5-;F2.1:1,4@5+;F4:4,1,3@4+;F1:3,4@3+;F5.2:3,1,4@3-;F5.1:3,1,4@3-;F4:1,2,3@2-;F1:1,2@0+",
      "4 0,3,0,0 M 1 3 F4:1,2,3@0+;F3:1,4,3,2@3+;F3:3,2,4,1@2-;F1:3,2@2-;F4:3,1,2@2-;F2.2:1,3@1-;F2.1:1,3@0+;F2.2:1,3@0+;F4:3,1,2@1+;F1:3,2@1+;F3:3,2,4,1@1+;F3:1,4,3,2@2-;F5.1:1,3,2@3-;F5.1:1,4,3@2+;F5.1:4,1,3@1+",
      "4 0,3,0,0 M 2 3 F3:1,4,3,2@3+;F3:3,2,4,1@2-;F3:1,4,2,3@4+;F3:2,3,4,1@3-;F4:3,1,2@2-",
      "4 0,3,0,0 K 3 0 F4:3,1,2@5+;F2.2:2,3@4-;F2.1:2,3@4+;F3:1,4,2,3@3+;F3:2,3,4,1@2-;F3:1,4,2,3@4+;F3:2,3,4,1@3-;F2.1:2,3@2-;F2.1:2,3@2-;F2.2:2,3@3+;F4:3,1,2@4-;F4:2,1,3@2-",
      "4 0,3,0,0 M 4 3 F4:4,1,3@2+;F1:3,2@4-;F4:3,2,4@4+;F2.2:3,4@3+;F2.1:4,3@2+;F2.2:3,4@2-;F4:3,2,4@3-;F1:3,2@3+;F5.1:4,3,2@3-;F4:3,1,4@2-",
      "4 0,3,0,1 K 1 0 F4:1,2,4@2+;F2.2:1,4@1+;F2.1:4,1@1+;F3:3,2,4,1@0+;F3:3,2,4,1@1+;F2.2:1,4@0-;F2.1:1,4@0-;F2.1:1,4@0-;F2.2:1,4@1+;F4:1,2,4@0-",
      "4 0,3,0,1 M 2 1 F1:1,4@1-;F4:1,2,4@1-;F5.1:2,1,4@3-;F2.2:1,2@2-;F2.1:1,2@1-;F2.2:1,2@2+;F4:2,1,4@3+;F1:2,4@3+;F5.2:3,1,2@0-;F5.2:3,2,1@1-",
      "4 0,3,0,1 M 2 3 F3:1,4,2,3@1+;F4:3,1,2@0-",
      "4 0,3,0,1 K 3 0 F5.1:3,1,4@1-;F5.1:1,3,4@2-;F4:3,1,2@1+;F2.2:2,3@0-;F2.1:2,3@0-;F2.2:2,3@1+;F4:3,1,2@2-;F4:2,1,3@0-",
      "4 0,3,0,1 M 4 1 F3:1,4,3,2@0-;F3:3,2,4,1@1+;F4:1,2,4@0-",
      "4 0,3,0,1 M 4 3 F1:3,2@0-;F4:3,2,4@0+;F3:1,4,3,2@2-;F5.2:1,4,3@1+;F5.1:4,3,2@3-;F2.2:3,4@2-;F2.1:3,4@2-;F2.2:3,4@2+;F4:4,2,3@3-;F1:4,2@3+;F5.2:1,4,3@1-;F4:3,1,4@0-",
      "4 0,3,0,2 M 1 2 F5.2:3,2,1@1+;F1:3,1@1-;F4:1,2,3@2-;F2.2:1,2@3-;F2.1:1,2@2+;F5.2:3,1,2@0+;F2.2:1,2@1+;F4:2,1,4@2+;F1:2,4@2+;F5.1:1,2,4@2-;F4:2,1,3@1+;F1:3,2@0+",
      "4 0,3,0,2 M 1 3 F5.2:3,2,1@1+;F5.1:3,1,2@0-;F3:1,3,2,4@3-;F6:1,2,3@1-;F2.1:3,1@0-;F2.2:1,3@1-;F5.1:1,3,2@2+;F5.2:1,2,3@3-;F4:3,1,2@2-;F1:3,1@0+",
      "4 0,3,0,2 K 2 0 F4:2,1,4@4+;F2.2:2,4@3+;F2.1:4,2@3-;F2.2:2,4@5-;F4:4,2,3@4+;F5.2:3,4,2@2-;F1:3,4@3+;F5.2:3,2,4@3-;F4:4,1,2@2-",
      "4 0,3,0,2 K 3 0 F4:3,1,2@4+;F5.1:3,2,4@3-;F1:3,4@4-;F4:3,2,4@4-;F2.1:3,2@2+;F4:3,2,4@3+;F1:3,4@3+;F5.1:2,3,4@3-;F4:3,1,2@2-",
      "4 0,3,0,2 M 4 2 F4:2,3,4@3-;F1:3,2@2+",
      "4 0,3,0,2 M 4 3 F1:1,2@0-;F4:1,2,3@0+;F5.2:3,2,1@3+;F5.1:3,1,2@2-;F2.1:3,1@1-;F4:1,2,3@0-;F2.1:3,1@2-;F2.2:1,3@3-;F5.1:2,1,4@6+;F3:2,1,4,3@7+;F3:1,4,3,2@5-;F5.1:4,3,2@6-;F5.1:1,3,4@4+;F5.2:1,4,3@5-;F4:3,1,4@4-;F1:3,1@2+",
      "4 0,3,0,4 M 1 3 F5.2:3,2,1@1+;F5.1:3,1,2@0-;F6:1,2,3@1-;F2.1:3,1@0-;F2.2:1,3@1-;F5.1:1,3,2@2+;F5.2:1,2,3@3-;F4:3,1,2@2-;F1:3,1@0+",
      "4 0,3,0,4 M 1 4 F4:1,2,4@0+;F3:3,2,4,1@1-;F3:1,4,3,2@0+;F1:1,4@1+",
      "4 0,3,0,4 M 2 3 F4:3,1,2@2-",
      "4 0,3,0,4 M 2 4 ",
      "4 0,3,0,4 K 3 0 F4:3,1,2@3+;F2.2:2,3@2-;F2.1:2,3@2-;F2.2:2,3@3+;F4:3,1,2@4-;F4:2,1,3@2-",
      "4 0,3,0,4 K 4 0 F3:3,2,4,1@2+;F3:1,4,3,2@3-",
      "4 0,3,1,0 K 1 0 F4:1,2,3@4+;F5.1:1,3,2@3-;F2.2:1,3@2+;F2.1:3,1@2-;F2.2:1,3@2-;F4:1,2,3@3-;F1:1,2@3+;F5.1:3,1,2@3-;F5.1:1,4,3@1+;F5.2:3,1,4@2+;F5.1:4,1,3@0+;F5.2:3,4,1@1+;F4:1,2,3@0-",
      "4 0,3,1,0 M 2 1 F5.1:1,4,3@1+;F1:4,3@1-;F5.1:1,4,3@3-;F5.1:4,1,3@0+;F5.2:3,4,1@1+;F4:1,2,3@0-",
      "4 0,3,1,0 M 2 3 F4:3,1,2@3-;F1:1,3@2+",
      "4 0,3,1,0 K 3 0 F4:3,1,2@4+;F2.2:2,3@3-;F5.2:1,2,3@2-;F2.1:2,3@4-;F2.2:2,3@5+;F4:2,1,3@4-;F1:1,2@3+;F5.2:1,3,2@3-;F3:1,4,2,3@1+;F3:1,4,3,2@2+;F3:2,3,4,1@0-;F3:3,2,4,1@1-;F4:2,1,3@0-",
      "4 0,3,1,0 M 4 1 F1:1,3@2-;F4:1,3,4@2+;F2.2:1,4@1+;F3:3,2,4,1@5+;F2.1:4,1@0+;F2.2:1,4@0-;F4:1,3,4@1-;F1:1,3@1+;F5.1:4,1,3@1-;F4:1,2,4@0-",
      "4 0,3,1,0 M 4 3 F5.1:4,3,2@3-;F5.2:1,4,3@2-;F5.1:1,4,3@2-;F1:1,3@3-;F4:1,3,4@3+;F2.1:1,4@1+;F4:1,3,4@2-;F1:1,3@2+;F3:1,3,4,2@2+;F4:4,1,2@0+;F1:4,2@0+",
      "4 0,3,1,2 K 1 0 F5.1:1,2,4@2-;F5.1:2,1,4@3-;F4:1,2,3@2+;F5.1:1,3,2@1-;F1:1,2@2-;F4:1,2,3@2+;F2.1:1,3@0+;F4:1,2,3@1-;F1:1,2@1+;F5.1:3,1,2@1-;F4:1,2,3@0-",
      "4 0,3,1,2 K 2 0 F4:2,1,4@3+;F2.2:2,4@2+;F2.1:4,2@2-;F2.2:2,4@4-;F4:4,2,3@3+;F5.2:3,4,2@1-;F1:3,4@2+;F5.2:3,2,4@2-;F3:1,3,4,2@0+;F3:1,3,2,4@1+;F4:4,1,2@0-",
      "4 0,3,1,2 K 3 0 F4:3,1,2@3+;F5.1:3,2,4@2-;F2.2:2,3@1-;F2.1:2,3@1-;F2.2:2,3@1+;F4:3,2,4@2+;F1:3,4@2+;F5.1:2,3,4@2-;F4:3,1,2@1-;F1:1,3@0+",
      "4 0,3,1,2 M 4 1 F1:1,3@0-;F4:3,1,4@1+;F7:3,2,4,1@2+;F6:1,4,3@1-;F4:1,2,3@0-",
      "4 0,3,1,2 M 4 2 F4:2,3,4@2-;F1:3,2@1+",
      "4 0,3,1,2 M 4 3 F7:2,4,1,3@0-;F6:2,4,1@0+",
      "4 0,3,1,4 K 1 0 F4:1,2,3@2+;F5.1:1,3,2@1-;F1:1,2@2-;F4:1,2,3@2+;F2.1:1,3@0+;F4:1,2,3@1-;F1:1,2@1+;F5.1:3,1,2@1-;F4:1,2,3@0-",
      "4 0,3,1,4 M 2 1 F1:1,3@0-;F4:1,2,3@0-",
      "4 0,3,1,4 M 2 3 F4:3,1,2@1-;F1:1,3@0+",
      "4 0,3,1,4 M 2 4 ",
      "4 0,3,1,4 K 3 0 F4:3,1,2@2+;F2.2:2,3@1-;F2.1:2,3@1-;F2.2:2,3@3+;F4:2,1,3@2-;F5.2:1,2,3@0-;F1:1,2@1+;F5.2:1,3,2@1-;F4:2,1,3@0-",
      "4 0,3,1,4 K 4 0 F3:3,2,4,1@1+;F3:1,4,3,2@2-;F5.1:4,1,3@0-;F5.1:1,4,3@1-",
      "4 0,3,2,0 M 1 2 F4:1,2,3@0+;F5.2:3,4,1@1-;F5.1:4,1,3@0-;F5.2:3,1,4@2-;F4:2,1,3@6+;F1:3,2@5+;F5.1:1,4,3@1-;F1:1,3@2+",
      "4 0,3,2,0 M 1 3 F5.2:2,4,1@1-;F5.1:4,1,2@0-;F5.2:2,1,4@2-;F5.1:1,4,2@1-;F6:1,2,3@5-;F4:1,2,3@4-;F1:1,2@2+;F1:1,2@2+",
      "4 0,3,2,0 K 2 0 F5.2:2,4,1@1-;F5.2:2,1,4@2-;F6:1,3,2@3+;F2.2:1,2@6-;F2.1:1,2@5+;F2.1:1,2@5+;F6:1,3,2@3-;F5.2:3,1,2@5-;F5.1:3,1,2@5-;F4:1,2,3@4-;F1:2,1@3+;F5.2:2,1,4@2+;F5.2:2,4,1@1+",
      "4 0,3,2,0 K 3 0 F5.2:2,4,1@1-;F5.2:2,1,4@2-;F6:1,3,2@3+;F4:1,2,3@5+;F2.2:1,3@6-;F2.1:1,3@5+;F2.1:1,3@5+;F4:3,1,2@4+;F1:2,3@3+;F5.2:2,1,3@3-;F5.1:2,1,3@3-;F5.2:2,1,4@2+;F5.2:2,4,1@1+",
      "4 0,3,2,0 M 4 2 F4:1,2,4@0+;F2.2:1,4@1-;F2.1:1,4@0+;F2.1:1,4@0+;F5.1:1,4,3@1+;F5.2:1,4,3@1+;F5.1:4,2,1@4-;F5.2:3,4,2@3-;F5.1:3,4,2@3-;F3:3,2,4,1@4+;F4:4,1,3@2-;F1:4,1@2+;F5.1:4,1,3@1-;F4:1,2,4@0-",
      "4 0,3,2,0 M 4 3 F4:1,2,4@0+;F6:2,3,1@4-;F5.1:4,3,1@6-;F5.2:2,4,3@5-;F5.1:2,4,3@5-;F3:2,3,4,1@6+;F6:2,4,1@4+;F2.2:1,4@3+;F2.1:4,1@1+;F2.1:4,1@1+;F5.1:4,1,2@2+;F5.2:4,2,1@3-;F4:1,2,4@0-;F1:1,2@0+",
      "4 0,3,2,1 K 1 0 F4:1,2,4@4+;F2.1:1,4@3-;F4:1,2,4@5-;F5.1:1,4,2@4+;F7:1,4,3,2@1-;F3:1,4,3,2@4-;F5.1:1,4,3@3-;F2.1:1,4@2-;F2.2:1,4@2+;F4:1,3,4@0+;F2.1:4,1@1+;F4:1,2,4@0-",
      "4 0,3,2,1 K 2 0 F5.1:2,1,4@3-;F2.1:2,1@2-;F2.2:1,2@3-;F5.1:1,2,4@5-;F2.1:1,2@3+;F4:2,1,3@2+;F1:3,2@1+;F5.2:3,1,2@1-;F5.1:1,3,2@0+;F4:1,3,4@1+;F1:1,4@1+",
      "4 0,3,2,1 K 3 0 F6:2,3,1@0-;F5.1:3,1,4@3-;F2.1:3,1@2-;F2.2:1,3@3-;F5.1:1,3,4@5-;F2.1:1,3@3+;F4:3,1,2@2+;F1:2,3@1+;F5.2:2,1,3@1-;F5.1:1,2,3@0+;F4:1,2,4@1+;F1:1,4@1+",
      "4 0,3,2,1 M 4 1 F6:2,3,1@0-;F4:1,2,4@3-;F6:1,3,2@1-",
      "4 0,3,2,1 M 4 2 F7:1,4,3,2@1-;F4:1,3,4@0+;F1:1,4@0+",
      "4 0,3,2,1 M 4 3 F6:2,3,1@0-;F7:2,3,1,4@0+;F4:3,2,4@3-;F1:2,3@2+",
      "4 0,3,2,4 M 1 2 F4:2,1,3@4+;F1:3,2@3+;F4:1,2,3@0+;F1:1,3@0+",
      "4 0,3,2,4 M 1 3 F6:1,2,3@3-;F4:1,2,3@2-;F1:1,2@0+;F1:1,2@0+",
      "4 0,3,2,4 M 1 4 F4:1,2,3@0+;F1:1,3@0+",
      "4 0,3,2,4 K 2 0 F6:1,3,2@1+;F2.2:1,2@4-;F2.1:1,2@3+;F2.1:1,2@3+;F6:1,3,2@1-;F5.2:3,1,2@3-;F5.1:3,1,2@3-;F4:1,2,3@2-;F1:1,2@0+",
      "4 0,3,2,4 K 3 0 F6:2,3,1@2-;F2.1:3,1@4-;F2.2:1,3@5-;F2.1:1,3@5+;F4:3,1,2@4+;F1:2,3@3+;F5.2:2,1,3@3-;F5.1:2,1,3@3-;F1:1,2@0+",
      "4 0,3,2,4 K 4 0 F5.2:2,4,1@4-;F3:3,2,4,1@3+;F5.2:2,1,4@5-;F3:1,4,3,2@4-;F5.1:4,1,3@2-;F5.1:1,4,3@3-",
      "4 0,3,4,0 M 1 3 F1:1,2@0-;F4:2,1,3@1+;F3:2,1,4,3@3+;F5.2:4,3,2@2+;F5.1:3,2,1@4-;F4:3,1,2@5+;F2.1:3,2@3+;F4:3,2,4@4+;F5.2:4,3,2@2-;F1:4,3@3+;F4:2,1,3@1-;F1:1,2@0+",
      "4 0,3,4,0 M 1 4 F4:1,2,4@0+;F1:4,3@2-;F4:4,1,3@2-;F3:1,4,3,2@5-;F2.2:1,4@1-;F2.1:1,4@0+;F2.2:1,4@0+;F4:4,1,3@1+;F1:4,3@1+;F5.1:1,4,3@1-",
      "4 0,3,4,0 M 2 3 F4:3,2,4@3+;F1:4,3@2+",
      "4 0,3,4,0 M 2 4 F4:1,2,4@0+;F5.1:4,1,3@1+;F1:4,1@2-;F4:1,2,4@3-;F5.2:3,2,1@4+;F5.1:3,1,2@3-;F5.1:2,1,4@5+;F3:1,4,3,2@4-;F5.2:4,3,1@2-;F5.1:1,4,3@3-;F4:1,3,4@1+;F2.1:1,4@0-;F2.2:1,4@1+;F2.1:4,1@1+;F4:1,2,4@0-",
      "4 0,3,4,0 K 3 0 F4:3,1,2@4+;F2.2:2,3@3-;F5.2:4,2,3@2-;F2.1:2,3@4-;F2.2:2,3@4+;F4:3,2,4@5+;F5.2:4,3,2@3-;F1:4,3@4+;F4:2,1,3@2-",
      "4 0,3,4,0 K 4 0 F4:4,1,3@4+;F5.1:4,3,2@3-;F1:4,2@4-;F4:4,2,3@4+;F2.1:4,3@2+;F4:4,2,3@3-;F1:4,2@3+;F5.1:3,4,2@3-;F4:4,1,3@2-",
      "4 0,3,4,1 K 1 0 F5.2:3,1,2@2-;F5.2:3,2,1@3-;F4:1,2,4@2+;F5.1:1,4,3@1-;F1:1,3@2-;F4:1,3,4@2+;F2.1:1,4@0+;F4:1,3,4@1-;F1:1,3@1+;F5.1:4,1,3@1-;F4:1,2,4@0-",
      "4 0,3,4,1 M 2 1 F1:1,4@0-;F4:1,2,4@0-",
      "4 0,3,4,1 M 2 3 F4:3,2,4@2+;F1:4,3@1+",
      "4 0,3,4,1 M 2 4 F7:3,2,1,4@0-",
      "4 0,3,4,1 K 3 0 F4:3,1,2@3+;F2.2:2,3@2-;F2.1:2,3@2-;F2.2:2,3@4+;F4:2,3,4@3+;F5.2:4,2,3@1-;F1:4,2@2+;F5.2:4,3,2@2-;F3:1,4,2,3@0+;F3:1,4,3,2@1+;F4:2,1,3@0-",
      "4 0,3,4,1 K 4 0 F4:4,1,3@3+;F5.1:4,3,2@2-;F2.2:3,4@1-;F2.1:3,4@1-;F2.2:3,4@1+;F4:4,2,3@2-;F1:4,2@2+;F5.1:3,4,2@2-;F4:4,1,3@1-;F1:1,4@0+;F3:1,4,3,2@0+",
      "4 0,3,4,2 M 1 2 F4:1,2,4@0+;F1:1,4@0+;F4:2,1,3@3+;F1:3,2@2+",
      "4 0,3,4,2 M 1 3 F7:2,1,4,3@3-;F6:1,2,4@3-;F4:1,2,4@2-;F1:1,2@0+;F1:1,2@0+",
      "4 0,3,4,2 M 1 4 F4:1,2,3@0+;F6:1,4,3@1+;F7:3,2,1,4@3+;F4:4,1,3@2+;F1:3,4@1+;F4:3,1,4@1-;F1:1,3@0+",
      "4 0,3,4,2 K 2 0 F4:2,1,3@6+;F5.1:2,1,3@5+;F5.2:2,1,3@5+;F4:3,2,4@4+;F1:4,3@3+;F5.2:4,1,3@3-;F5.1:4,1,3@3-;F4:1,2,4@2-;F1:1,2@0+",
      "4 0,3,4,2 K 3 0 F4:3,1,4@6+;F3:2,1,3,4@5+;F5.1:3,2,4@4+;F5.1:2,4,3@3-;F4:2,1,3@4-;F1:2,1@4+;F5.1:2,4,1@3+;F4:1,2,4@2-;F1:1,2@0+",
      "4 0,3,4,2 K 4 0 F4:4,1,2@6+;F5.1:4,2,1@5-;F5.2:3,4,2@4-;F5.1:4,3,2@3+;F4:4,1,3@4-;F1:4,1@4+;F3:3,2,4,1@3+;F4:1,2,4@2-;F1:1,2@0+",
      "4 0,4,0,0 M 1 4 F4:1,2,4@0+;F5.2:4,3,1@1-;F5.1:3,1,4@0-;F5.2:4,1,3@2-;F5.1:1,3,4@1-;F1:4,2@4-;F4:4,1,2@4-;F2.2:1,4@3-;F2.1:1,4@2+;F2.2:1,4@2+;F4:4,1,2@3+;F1:4,2@3+;F5.1:1,4,2@3-",
      "4 0,4,0,0 M 2 4 F4:4,1,2@4-",
      "4 0,4,0,0 M 3 4 F4:3,1,4@2+;F1:4,2@4-;F4:4,2,3@4+;F2.2:3,4@3-;F2.1:3,4@2+;F2.2:3,4@2+;F4:4,2,3@3-;F1:4,2@3+;F5.1:3,4,2@3-;F4:4,1,3@2-",
      "4 0,4,0,0 K 4 0 F4:4,1,2@5+;F2.2:2,4@4-;F2.1:2,4@4-;F2.2:2,4@5+;F4:4,1,2@6-;F3:1,3,2,4@3+;F3:1,3,4,2@4+;F3:2,4,3,1@2-;F3:3,1,4,2@3+;F4:2,1,4@2-",
      "4 0,4,0,1 K 1 0 F4:1,2,4@4+;F5.1:1,4,2@3-;F2.2:1,4@2+;F2.1:4,1@2-;F2.2:1,4@2-;F4:1,2,4@3-;F1:1,2@3+;F5.1:4,1,2@3-;F5.1:1,3,4@1+;F5.2:4,1,3@2+;F5.1:3,1,4@0+;F5.2:4,3,1@1+;F4:1,2,4@0-",
      "4 0,4,0,1 M 2 1 F5.1:1,3,4@1+;F1:3,4@1-;F5.1:1,3,4@3-;F5.1:3,1,4@0+;F5.2:4,3,1@1+;F4:1,2,4@0-",
      "4 0,4,0,1 M 2 4 F4:4,1,2@3-;F1:1,4@2+",
      "4 0,4,0,1 M 3 1 F1:1,4@2-;F4:1,3,4@2-;F2.2:1,3@1+;F3:3,1,4,2@5-;F2.1:3,1@0+;F2.2:1,3@0-;F4:1,3,4@1+;F1:1,4@1+;F5.1:3,1,4@1-;F4:1,2,3@0-",
      "4 0,4,0,1 M 3 4 F5.1:3,4,2@3-;F5.2:1,3,4@2-;F5.1:1,3,4@2-;F1:1,4@3-;F4:1,3,4@3-;F2.1:1,3@1+;F4:1,3,4@2+;F1:1,4@2+;F3:1,4,3,2@2+;F4:3,1,2@0+;F1:3,2@0+",
      "4 0,4,0,1 K 4 0 F4:4,1,2@4+;F2.2:2,4@3-;F5.2:1,2,4@2-;F2.1:2,4@4-;F2.2:2,4@5+;F4:2,1,4@4-;F1:1,2@3+;F5.2:1,4,2@3-;F3:1,3,2,4@1+;F3:1,3,4,2@2+;F3:2,4,3,1@0-;F3:3,1,4,2@1+;F4:2,1,4@0-",
      "4 0,4,0,2 M 1 2 F4:1,2,4@0+;F5.2:4,3,1@1-;F5.1:3,1,4@0-;F5.2:4,1,3@2-;F4:2,1,4@6+;F1:4,2@5+;F5.1:1,3,4@1-;F1:1,4@2+",
      "4 0,4,0,2 M 1 4 F5.2:2,3,1@1-;F5.1:3,1,2@0-;F5.2:2,1,3@2-;F5.1:1,3,2@1-;F6:1,2,4@5-;F4:1,2,4@4-;F1:1,2@2+;F1:1,2@2+",
      "4 0,4,0,2 K 2 0 F5.2:2,3,1@1-;F5.2:2,1,3@2-;F6:1,4,2@3+;F2.2:1,2@6-;F2.1:1,2@5+;F2.1:1,2@5+;F6:1,4,2@3-;F5.2:4,1,2@5-;F5.1:4,1,2@5-;F4:1,2,4@4-;F1:2,1@3+;F5.2:2,1,3@2+;F5.2:2,3,1@1+",
      "4 0,4,0,2 M 3 2 F4:1,2,3@0+;F2.2:1,3@1-;F2.1:1,3@0+;F2.1:1,3@0+;F5.1:1,3,4@1+;F5.2:1,3,4@1+;F5.1:3,2,1@4-;F5.2:4,3,2@3-;F5.1:4,3,2@3-;F3:3,1,4,2@4-;F4:3,1,4@2-;F1:3,1@2+;F5.1:3,1,4@1-;F4:1,2,3@0-",
      "4 0,4,0,2 M 3 4 F4:1,2,3@0+;F6:2,4,1@4-;F5.1:3,4,1@6-;F5.2:2,3,4@5-;F5.1:2,3,4@5-;F3:2,4,3,1@6+;F6:2,3,1@4+;F2.2:1,3@3+;F2.1:3,1@1+;F2.1:3,1@1+;F5.1:3,1,2@2+;F5.2:3,2,1@3-;F4:1,2,3@0-;F1:1,2@0+",
      "4 0,4,0,2 K 4 0 F5.2:2,3,1@1-;F5.2:2,1,3@2-;F6:1,4,2@3+;F4:1,2,4@5+;F2.2:1,4@6-;F2.1:1,4@5+;F2.1:1,4@5+;F4:4,1,2@4+;F1:2,4@3+;F5.2:2,1,4@3-;F5.1:2,1,4@3-;F5.2:2,1,3@2+;F5.2:2,3,1@1+",
      "4 0,4,0,3 M 1 3 F4:1,2,3@0+;F1:3,4@2-;F4:3,1,4@2-;F3:1,3,4,2@5-;F2.2:1,3@1-;F2.1:1,3@0+;F2.2:1,3@0+;F4:3,1,4@1+;F1:3,4@1+;F5.1:1,3,4@1-",
      "4 0,4,0,3 M 1 4 F1:1,2@0-;F4:2,1,4@1+;F3:2,1,3,4@3+;F5.2:3,4,2@2+;F5.1:4,2,1@4-;F4:4,1,2@5+;F2.1:4,2@3+;F4:4,2,3@4+;F5.2:3,4,2@2-;F1:3,4@3+;F4:2,1,4@1-;F1:1,2@0+",
      "4 0,4,0,3 M 2 3 F4:1,2,3@0+;F5.1:3,1,4@1+;F1:3,1@2-;F4:1,2,3@3-;F5.2:4,2,1@4+;F5.1:4,1,2@3-;F5.1:2,1,3@5+;F3:1,3,4,2@4-;F5.2:3,4,1@2-;F5.1:1,3,4@3-;F4:1,3,4@1-;F2.1:1,3@0-;F2.2:1,3@1+;F2.1:3,1@1+;F4:1,2,3@0-",
      "4 0,4,0,3 M 2 4 F4:4,2,3@3+;F1:3,4@2+",
      "4 0,4,0,3 K 3 0 F4:3,1,4@4+;F5.1:3,4,2@3-;F1:3,2@4-;F4:3,2,4@4+;F2.1:3,4@2+;F4:3,2,4@3-;F1:3,2@3+;F5.1:4,3,2@3-;F4:3,1,4@2-",
      "4 0,4,0,3 K 4 0 F4:4,1,2@4+;F2.2:2,4@3-;F5.2:3,2,4@2-;F2.1:2,4@4-;F2.2:2,4@4+;F4:4,2,3@5+;F5.2:3,4,2@3-;F1:3,4@4+;F4:2,1,4@2-",
      "4 0,4,1,0 K 1 0 F4:1,2,3@2+;F2.2:1,3@1+;F2.1:3,1@1+;F3:3,1,4,2@0-;F3:3,1,4,2@1-;F2.2:1,3@0-;F2.1:1,3@0-;F2.1:1,3@0-;F2.2:1,3@1+;F4:1,2,3@0-",
      "4 0,4,1,0 M 2 1 F1:1,3@1-;F4:1,2,3@1-;F5.1:2,1,3@3-;F2.2:1,2@2-;F2.1:1,2@1-;F2.2:1,2@2+;F4:2,1,3@3+;F1:2,3@3+;F5.2:4,1,2@0-;F5.2:4,2,1@1-",
      "4 0,4,1,0 M 2 4 F3:1,3,2,4@1+;F4:4,1,2@0-",
      "4 0,4,1,0 M 3 1 F3:1,3,4,2@0-;F3:3,1,4,2@1-;F4:1,2,3@0-",
      "4 0,4,1,0 M 3 4 F1:4,2@0-;F4:4,2,3@0+;F3:1,3,4,2@2-;F5.2:1,3,4@1+;F5.1:3,4,2@3-;F2.2:3,4@2+;F2.1:4,3@2-;F2.2:3,4@2-;F4:3,2,4@3-;F1:3,2@3+;F5.2:1,3,4@1-;F4:4,1,3@0-",
      "4 0,4,1,0 K 4 0 F5.1:4,1,3@1-;F5.1:1,4,3@2-;F4:4,1,2@1+;F2.2:2,4@0-;F2.1:2,4@0-;F2.2:2,4@1+;F4:4,1,2@2-;F4:2,1,4@0-",
      "4 0,4,1,2 K 1 0 F4:1,2,3@4+;F2.1:1,3@3-;F4:1,2,3@5-;F5.1:1,3,2@4+;F7:1,3,4,2@1-;F3:1,3,4,2@4-;F5.1:1,3,4@3-;F2.1:1,3@2-;F2.2:1,3@2+;F4:1,3,4@0-;F2.1:3,1@1+;F4:1,2,3@0-",
      "4 0,4,1,2 K 2 0 F5.1:2,1,3@3-;F2.1:2,1@2-;F2.2:1,2@3-;F5.1:1,2,3@5-;F2.1:1,2@3+;F4:2,1,4@2+;F1:4,2@1+;F5.2:4,1,2@1-;F5.1:1,4,2@0+;F4:1,3,4@1-;F1:1,3@1+",
      "4 0,4,1,2 M 3 1 F6:2,4,1@0-;F4:1,2,3@3-;F6:1,4,2@1-",
      "4 0,4,1,2 M 3 2 F7:1,3,4,2@1-;F4:1,3,4@0-;F1:1,3@0+",
      "4 0,4,1,2 M 3 4 F6:2,4,1@0-;F7:2,4,1,3@0+;F4:4,2,3@3-;F1:2,4@2+",
      "4 0,4,1,2 K 4 0 F6:2,4,1@0-;F7:2,4,1,3@0+;F4:4,1,3@4+;F2.1:4,3@3-;F2.2:3,4@4-;F2.1:3,4@4+;F4:4,2,3@3-;F1:2,4@2+;F5.2:2,3,4@2-;F5.1:2,3,4@2-;F4:3,1,2@1-;F1:1,3@0+",
      "4 0,4,1,3 K 1 0 F5.2:4,1,2@2-;F5.2:4,2,1@3-;F4:1,2,3@2+;F5.1:1,3,4@1-;F1:1,4@2-;F4:1,3,4@2-;F2.1:1,3@0+;F4:1,3,4@1+;F1:1,4@1+;F5.1:3,1,4@1-;F4:1,2,3@0-",
      "4 0,4,1,3 M 2 1 F1:1,3@0-;F4:1,2,3@0-",
      "4 0,4,1,3 M 2 3 F7:4,2,1,3@0-",
      "4 0,4,1,3 M 2 4 F4:4,2,3@2+;F1:3,4@1+",
      "4 0,4,1,3 K 3 0 F4:3,1,4@3+;F5.1:3,4,2@2-;F2.2:3,4@1+;F2.1:4,3@1-;F2.2:3,4@1-;F4:3,2,4@2-;F1:3,2@2+;F5.1:4,3,2@2-;F4:3,1,4@1-;F1:1,3@0+;F3:1,3,4,2@0+",
      "4 0,4,1,3 K 4 0 F4:4,1,2@3+;F2.2:2,4@2-;F2.1:2,4@2-;F2.2:2,4@4+;F4:2,3,4@3-;F5.2:3,2,4@1-;F1:3,2@2+;F5.2:3,4,2@2-;F3:1,3,2,4@0+;F3:1,3,4,2@1+;F4:2,1,4@0-",
      "4 0,4,2,0 M 1 2 F5.2:4,2,1@1+;F1:4,1@1-;F4:1,2,4@2-;F2.2:1,2@3-;F2.1:1,2@2+;F5.2:4,1,2@0+;F2.2:1,2@1+;F4:2,1,3@2+;F1:2,3@2+;F5.1:1,2,3@2-;F4:2,1,4@1+;F1:4,2@0+",
      "4 0,4,2,0 M 1 4 F5.2:4,2,1@1+;F5.1:4,1,2@0-;F3:1,4,2,3@3-;F6:1,2,4@1-;F2.1:4,1@0-;F2.2:1,4@1-;F5.1:1,4,2@2+;F5.2:1,2,4@3-;F4:4,1,2@2-;F1:4,1@0+",
      "4 0,4,2,0 K 2 0 F4:2,1,3@4+;F2.2:2,3@3+;F2.1:3,2@3-;F2.2:2,3@5-;F4:3,2,4@4+;F5.2:4,3,2@2-;F1:4,3@3+;F5.2:4,2,3@3-;F4:3,1,2@2-",
      "4 0,4,2,0 M 3 2 F4:2,3,4@3+;F1:4,2@2+",
      "4 0,4,2,0 M 3 4 F1:1,2@0-;F4:1,2,4@0+;F5.2:4,2,1@3+;F5.1:4,1,2@2-;F2.1:4,1@1-;F4:1,2,4@0-;F2.1:4,1@2-;F2.2:1,4@3-;F5.1:2,1,3@6+;F3:2,1,3,4@7+;F3:1,3,4,2@5-;F5.1:3,4,2@6-;F5.1:1,4,3@4+;F5.2:1,3,4@5-;F4:4,1,3@4-;F1:4,1@2+",
      "4 0,4,2,0 K 4 0 F4:4,1,2@4+;F5.1:4,2,3@3-;F1:4,3@4-;F4:4,2,3@4-;F2.1:4,2@2+;F4:4,2,3@3+;F1:4,3@3+;F5.1:2,4,3@3-;F4:4,1,2@2-",
      "4 0,4,2,1 K 1 0 F5.1:1,2,3@2-;F5.1:2,1,3@3-;F4:1,2,4@2+;F5.1:1,4,2@1-;F1:1,2@2-;F4:1,2,4@2+;F2.1:1,4@0+;F4:1,2,4@1-;F1:1,2@1+;F5.1:4,1,2@1-;F4:1,2,4@0-",
      "4 0,4,2,1 K 2 0 F4:2,1,3@3+;F2.2:2,3@2+;F2.1:3,2@2-;F2.2:2,3@4-;F4:3,2,4@3+;F5.2:4,3,2@1-;F1:4,3@2+;F5.2:4,2,3@2-;F3:1,4,3,2@0+;F3:1,4,2,3@1+;F4:3,1,2@0-",
      "4 0,4,2,1 M 3 1 F1:1,4@0-;F4:4,1,3@1+;F7:4,2,3,1@2+;F6:1,3,4@1-;F4:1,2,4@0-",
      "4 0,4,2,1 M 3 2 F4:2,3,4@2+;F1:4,2@1+",
      "4 0,4,2,1 M 3 4 F7:2,3,1,4@0-;F6:2,3,1@0+",
      "4 0,4,2,1 K 4 0 F4:4,1,2@3+;F5.1:4,2,3@2-;F2.2:2,4@1-;F2.1:2,4@1-;F2.2:2,4@1+;F4:4,2,3@2+;F1:4,3@2+;F5.1:2,4,3@2-;F4:4,1,2@1-;F1:1,4@0+;F3:1,4,2,3@0+",
      "4 0,4,2,3 M 1 2 F4:1,2,3@0+;F1:1,3@0+;F4:2,1,4@3+;F1:4,2@2+",
      "4 0,4,2,3 M 1 3 F4:1,2,4@0+;F6:1,3,4@1+;F7:4,2,1,3@3+;F4:3,1,4@2+;F1:4,3@1+;F4:4,1,3@1-;F1:1,4@0+",
      "4 0,4,2,3 M 1 4 F7:2,1,3,4@3-;F6:1,2,3@3-;F4:1,2,3@2-;F1:1,2@0+;F1:1,2@0+",
      "4 0,4,2,3 K 2 0 F4:2,1,4@6+;F5.1:2,1,4@5+;F5.2:2,1,4@5+;F4:4,2,3@4+;F1:3,4@3+;F5.2:3,1,4@3-;F5.1:3,1,4@3-;F4:1,2,3@2-;F1:1,2@0+",
      "4 0,4,2,3 K 3 0 F4:3,1,2@6+;F5.1:3,2,1@5-;F5.2:4,3,2@4-;F5.1:3,4,2@3+;F4:3,1,4@4-;F1:3,1@4+;F3:3,1,4,2@3-;F4:1,2,3@2-;F1:1,2@0+",
      "4 0,4,2,3 K 4 0 F4:4,1,3@6+;F3:2,1,4,3@5+;F5.1:4,2,3@4+;F5.1:2,3,4@3-;F4:2,1,4@4-;F1:2,1@4+;F5.1:2,3,1@3+;F4:1,2,3@2-;F1:1,2@0+",
      "4 0,4,3,0 M 1 3 F4:1,2,3@0+;F3:3,1,4,2@1+;F3:1,3,4,2@0+;F1:1,3@1+",
      "4 0,4,3,0 M 1 4 F5.2:4,2,1@1+;F5.1:4,1,2@0-;F6:1,2,4@1-;F2.1:4,1@0-;F2.2:1,4@1-;F5.1:1,4,2@2+;F5.2:1,2,4@3-;F4:4,1,2@2-;F1:4,1@0+",
      "4 0,4,3,0 M 2 3 ",
      "4 0,4,3,0 M 2 4 F4:4,1,2@2-",
      "4 0,4,3,0 K 3 0 F3:3,1,4,2@2-;F3:1,3,4,2@3-",
      "4 0,4,3,0 K 4 0 F4:4,1,2@3+;F2.2:2,4@2-;F2.1:2,4@2-;F2.2:2,4@3+;F4:4,1,2@4-;F4:2,1,4@2-",
      "4 0,4,3,1 K 1 0 F4:1,2,4@2+;F5.1:1,4,2@1-;F1:1,2@2-;F4:1,2,4@2+;F2.1:1,4@0+;F4:1,2,4@1-;F1:1,2@1+;F5.1:4,1,2@1-;F4:1,2,4@0-",
      "4 0,4,3,1 M 2 1 F1:1,4@0-;F4:1,2,4@0-",
      "4 0,4,3,1 M 2 3 ",
      "4 0,4,3,1 M 2 4 F4:4,1,2@1-;F1:1,4@0+",
      "4 0,4,3,1 K 3 0 F3:3,1,4,2@1-;F3:1,3,4,2@2-;F5.1:3,1,4@0-;F5.1:1,3,4@1-",
      "4 0,4,3,1 K 4 0 F4:4,1,2@2+;F2.2:2,4@1-;F2.1:2,4@1-;F2.2:2,4@3+;F4:2,1,4@2-;F5.2:1,2,4@0-;F1:1,2@1+;F5.2:1,4,2@1-;F4:2,1,4@0-",
      "4 0,4,3,2 M 1 2 F4:2,1,4@4+;F1:4,2@3+;F4:1,2,4@0+;F1:1,4@0+",
      "4 0,4,3,2 M 1 3 F4:1,2,4@0+;F1:1,4@0+",
      "4 0,4,3,2 M 1 4 F6:1,2,4@3-;F4:1,2,4@2-;F1:1,2@0+;F1:1,2@0+",
      "4 0,4,3,2 K 2 0 F6:1,4,2@1+;F2.2:1,2@4-;F2.1:1,2@3+;F2.1:1,2@3+;F6:1,4,2@1-;F5.2:4,1,2@3-;F5.1:4,1,2@3-;F4:1,2,4@2-;F1:1,2@0+",
      "4 0,4,3,2 K 3 0 F5.2:2,3,1@4-;F3:3,1,4,2@3-;F5.2:2,1,3@5-;F3:1,3,4,2@4-;F5.1:3,1,4@2-;F5.1:1,3,4@3-",
      "4 0,4,3,2 K 4 0 F6:2,4,1@2-;F2.1:4,1@4-;F2.2:1,4@5-;F2.1:1,4@5+;F4:4,1,2@4+;F1:2,4@3+;F5.2:2,1,4@3-;F5.1:2,1,4@3-;F1:1,2@0+",
      "4 1,0,0,0 K 1 0 F5.1:1,4,2@5+;F5.1:4,1,2@4+;F5.1:1,3,2@3+;F5.2:2,1,4@6+;F5.2:2,4,1@5+;F5.2:2,1,3@4+;F5.1:3,1,2@2+;F5.2:2,3,1@3+;F2.2:1,2@1+;F2.2:1,2@2-;F2.2:1,2@0-;F2.2:1,2@1+",
      "4 1,0,0,0 M 2 1 F5.1:2,1,4@5-;F5.2:4,2,1@4-;F5.1:2,1,3@3-;F5.2:3,2,1@2-;F1:2,1@0+;F5.2:3,2,1@0+;F5.1:2,1,3@1+;F5.2:4,2,1@2+;F5.1:2,1,4@3+",
      "4 1,0,0,0 M 3 1 F5.1:3,1,4@5-;F5.2:4,3,1@4-;F1:3,1@2+;F5.2:4,3,1@2+;F5.1:3,1,4@3+",
      "4 1,0,0,0 M 4 1 F1:4,1@4+",
      "4 1,0,0,2 K 1 0 F5.1:1,2,4@2-;F5.1:1,3,2@1+;F5.1:3,1,2@0+;F5.1:2,1,4@3-;F5.2:2,1,3@2+;F5.2:2,3,1@1+",
      "4 1,0,0,2 K 2 0 F4:2,1,4@3+;F2.2:2,4@2+;F2.1:4,2@2-;F2.2:2,4@2-;F4:2,1,4@3-;F5.2:1,4,2@4-;F5.1:4,2,1@3-;F3:1,3,2,4@1+;F3:1,3,4,2@2+;F3:2,4,3,1@0-;F3:3,1,4,2@1+;F4:2,1,4@0-",
      "4 1,0,0,2 M 3 1 F3:2,4,3,1@2+;F1:3,1@0+",
      "4 1,0,0,2 M 3 2 F4:3,1,2@0+;F1:2,4@2-;F4:2,3,4@2-;F2.2:2,3@1+;F2.1:3,2@0+;F2.2:2,3@0-;F4:2,3,4@1+;F1:2,4@1+;F5.1:3,2,4@1-;F4:2,1,3@0-",
      "4 1,0,0,2 M 4 1 ",
      "4 1,0,0,2 M 4 2 F3:1,3,2,4@1+;F3:2,4,3,1@0-;F3:1,3,4,2@2+;F3:3,1,4,2@1+;F4:2,1,4@0-",
      "4 1,0,0,3 K 1 0 F3:1,2,3,4@2-;F2.2:1,2@1+;F3:2,1,3,4@3-;F2.2:1,2@2-;F2.2:1,2@0-;F2.2:1,2@1+",
      "4 1,0,0,3 M 2 1 F3:2,1,3,4@2-;F1:2,1@0+",
      "4 1,0,0,3 M 2 3 F4:2,1,3@0+;F1:3,4@2-;F4:3,2,4@2-;F2.2:2,3@1-;F2.1:2,3@0+;F2.2:2,3@0+;F4:3,2,4@1+;F1:3,4@1+;F5.1:2,3,4@1-;F4:3,1,2@0-",
      "4 1,0,0,3 K 3 0 F4:3,1,4@3+;F2.2:3,4@2+;F2.1:4,3@2-;F2.2:3,4@2-;F4:3,1,4@3-;F5.2:1,4,3@4-;F5.1:4,3,1@3-;F4:3,1,4@2-",
      "4 1,0,0,3 M 4 1 ",
      "4 1,0,0,3 M 4 3 F4:3,1,4@2-",
      "4 1,0,0,4 K 1 0 F5.1:1,3,2@3+;F5.1:3,1,2@2+;F5.2:2,1,3@4+;F5.2:2,3,1@3+;F2.2:1,2@1+;F2.2:1,2@2-;F2.2:1,2@0-;F2.2:1,2@1+",
      "4 1,0,0,4 M 2 1 F5.1:2,1,3@3-;F5.2:3,2,1@2-;F1:2,1@0+;F5.2:3,2,1@0+;F5.1:2,1,3@1+",
      "4 1,0,0,4 M 2 4 F4:2,1,4@0+;F3:3,1,4,2@1-;F3:2,4,3,1@0+;F3:1,3,2,4@3+;F1:2,4@1+;F3:1,3,2,4@1-",
      "4 1,0,0,4 M 3 1 F1:3,1@2+",
      "4 1,0,0,4 M 3 4 F4:3,1,4@2+;F1:3,4@2+",
      "4 1,0,0,4 K 4 0 ",
      "4 1,0,2,0 K 1 0 F5.1:1,2,3@2-;F5.1:1,4,2@1+;F5.1:4,1,2@0+;F5.1:2,1,3@3-;F5.2:2,1,4@2+;F5.2:2,4,1@1+",
      "4 1,0,2,0 K 2 0 F4:2,1,3@3+;F2.2:2,3@2+;F2.1:3,2@2+;F3:1,4,3,2@1+;F3:3,2,4,1@0-;F3:1,4,3,2@2+;F3:3,2,4,1@1-;F2.2:2,3@0-;F2.1:2,3@0-;F2.1:2,3@0-;F2.2:2,3@1+;F4:3,1,2@2-;F4:2,1,3@0-",
      "4 1,0,2,0 M 3 1 ",
      "4 1,0,2,0 M 3 2 F3:1,4,2,3@1+;F3:2,3,4,1@0-;F3:1,4,3,2@2+;F3:3,2,4,1@1-;F4:2,1,3@0-",
      "4 1,0,2,0 M 4 1 F3:2,3,4,1@2+;F1:4,1@0+",
      "4 1,0,2,0 M 4 2 F4:4,1,2@0+;F1:2,3@2-;F4:2,3,4@2+;F2.2:2,4@1+;F2.1:4,2@0+;F2.2:2,4@0-;F4:2,3,4@1-;F1:2,3@1+;F5.1:4,2,3@1-;F4:2,1,4@0-",
      "4 1,0,2,3 K 1 0 F3:1,2,3,4@1-;F3:2,1,3,4@2-;F5.1:1,2,3@0-;F5.1:2,1,3@1-",
      "4 1,0,2,3 K 2 0 F4:2,1,3@2+;F5.1:2,3,4@1-;F1:2,4@2-;F4:2,3,4@2-;F2.1:2,3@0+;F4:2,3,4@1+;F1:2,4@1+;F5.1:3,2,4@1-;F4:2,1,3@0-",
      "4 1,0,2,3 K 3 0 F4:3,1,4@2+;F2.2:3,4@1+;F2.1:4,3@1-;F2.2:3,4@3-;F4:4,2,3@2-;F5.2:2,4,3@0-;F1:2,4@1+;F5.2:2,3,4@1-;F4:4,1,3@0-",
      "4 1,0,2,3 M 4 1 ",
      "4 1,0,2,3 M 4 2 F1:2,3@0-;F4:2,1,3@0-;F6:3,4,2@2+",
      "4 1,0,2,3 M 4 3 F4:3,2,4@1-;F1:2,3@0+",
      "4 1,0,2,4 K 1 0 F5.1:1,2,3@0-;F5.1:2,1,3@1-",
      "4 1,0,2,4 K 2 0 F4:2,1,3@1+;F2.2:2,3@0+;F2.1:3,2@0-;F2.2:2,3@0-;F4:2,1,3@1-;F5.2:1,3,2@2-;F5.1:3,2,1@1-;F4:2,1,3@0-",
      "4 1,0,2,4 M 3 1 ",
      "4 1,0,2,4 M 3 2 F4:2,1,3@0-",
      "4 1,0,2,4 M 3 4 ",
      "4 1,0,2,4 K 4 0 F3:2,3,4,1@0+;F3:1,4,2,3@1-",
      "4 1,0,3,0 K 1 0 F5.1:1,4,2@3+;F5.1:4,1,2@2+;F5.2:2,1,4@4+;F5.2:2,4,1@3+;F2.2:1,2@1+;F2.2:1,2@2-;F2.2:1,2@0-;F2.2:1,2@1+",
      "4 1,0,3,0 M 2 1 F5.1:2,1,4@3-;F5.2:4,2,1@2-;F1:2,1@0+;F5.2:4,2,1@0+;F5.1:2,1,4@1+",
      "4 1,0,3,0 M 2 3 F4:2,1,3@0+;F3:3,2,4,1@1+;F3:2,3,4,1@0+;F3:1,4,2,3@3+;F1:2,3@1+;F3:1,4,2,3@1-",
      "4 1,0,3,0 K 3 0 F5.2:3,1,4@3+;F5.1:1,4,3@4+;F5.2:3,4,1@2+;F5.1:4,1,3@3+",
      "4 1,0,3,0 M 4 1 F1:4,1@2+",
      "4 1,0,3,0 M 4 3 F4:4,1,3@2+;F1:4,3@2+",
      "4 1,0,3,2 K 1 0 F5.1:1,2,4@0-;F5.1:2,1,4@1-",
      "4 1,0,3,2 K 2 0 F4:2,1,4@1+;F2.2:2,4@0+;F2.1:4,2@0-;F2.2:2,4@0-;F4:2,1,4@1-;F5.2:1,4,2@2-;F5.1:4,2,1@1-;F4:2,1,4@0-",
      "4 1,0,3,2 K 3 0 F3:2,4,3,1@0+;F3:1,3,2,4@1-",
      "4 1,0,3,2 M 4 1 ",
      "4 1,0,3,2 M 4 2 F4:2,1,4@0-",
      "4 1,0,3,2 M 4 3 ",
      "4 1,0,3,4 K 1 0 F2.2:1,2@1+;F2.2:1,2@2-;F2.2:1,2@0-;F2.2:1,2@1+",
      "4 1,0,3,4 M 2 1 F1:2,1@0+",
      "4 1,0,3,4 M 2 3 F4:2,1,3@0+;F1:2,3@0+",
      "4 1,0,3,4 M 2 4 F4:2,1,4@0+;F1:2,4@0+",
      "4 1,0,3,4 K 3 0 ",
      "4 1,0,3,4 K 4 0 ",
      "4 1,0,4,0 K 1 0 F3:1,2,4,3@2-;F2.2:1,2@1+;F3:2,1,4,3@3-;F2.2:1,2@2-;F2.2:1,2@0-;F2.2:1,2@1+",
      "4 1,0,4,0 M 2 1 F3:2,1,4,3@2-;F1:2,1@0+",
      "4 1,0,4,0 M 2 4 F4:2,1,4@0+;F1:4,3@2-;F4:4,2,3@2-;F2.2:2,4@1-;F2.1:2,4@0+;F2.2:2,4@0+;F4:4,2,3@1+;F1:4,3@1+;F5.1:2,4,3@1-;F4:4,1,2@0-",
      "4 1,0,4,0 M 3 1 ",
      "4 1,0,4,0 M 3 4 F4:4,1,3@2-",
      "4 1,0,4,0 K 4 0 F4:4,1,3@3+;F2.2:3,4@2-;F2.1:3,4@2-;F2.2:3,4@3+;F4:4,1,3@4-;F4:3,1,4@2-",
      "4 1,0,4,2 K 1 0 F3:1,2,4,3@1-;F3:2,1,4,3@2-;F5.1:1,2,4@0-;F5.1:2,1,4@1-",
      "4 1,0,4,2 K 2 0 F4:2,1,4@2+;F5.1:2,4,3@1-;F1:2,3@2-;F4:2,3,4@2+;F2.1:2,4@0+;F4:2,3,4@1-;F1:2,3@1+;F5.1:4,2,3@1-;F4:2,1,4@0-",
      "4 1,0,4,2 M 3 1 ",
      "4 1,0,4,2 M 3 2 F1:2,4@0-;F4:2,1,4@0-",
      "4 1,0,4,2 M 3 4 F4:4,2,3@1-;F1:2,4@0+",
      "4 1,0,4,2 K 4 0 F4:4,1,3@2+;F2.2:3,4@1-;F2.1:3,4@1-;F2.2:3,4@3+;F4:3,2,4@2-;F5.2:2,3,4@0-;F1:2,3@1+;F5.2:2,4,3@1-;F4:3,1,4@0-",
      "4 1,0,4,3 K 1 0 F7:4,3,1,2@1-;F2.2:1,2@4+;F2.1:2,1@4+;F5.2:3,2,1@3-;F3:2,1,4,3@2-;F5.1:2,1,4@1-;F7:4,3,2,1@2+;F2.1:2,1@0-;F2.2:1,2@2-;F2.2:1,2@0-;F2.2:1,2@1+",
      "4 1,0,4,3 M 2 1 F4:2,1,4@0+;F1:2,4@0+",
      "4 1,0,4,3 M 2 3 F4:3,2,4@4+;F1:4,3@3+;F4:2,1,4@0+;F1:2,4@0+",
      "4 1,0,4,3 M 2 4 F4:2,1,3@0+;F6:3,4,2@2-;F4:4,2,3@4+;F1:3,4@3+;F1:2,3@0+",
      "4 1,0,4,3 K 3 0 F4:3,1,2@5+;F2.1:3,2@4-;F2.2:2,3@5-;F2.1:2,3@5+;F4:3,2,4@4+;F1:4,3@3+;F5.2:4,2,3@3-;F5.1:4,2,3@3-;F4:2,1,4@2-;F1:2,1@0+",
      "4 1,0,4,3 K 4 0 F6:3,4,2@2-;F4:4,1,2@5+;F2.1:4,2@4-;F2.2:2,4@5-;F2.1:2,4@5+;F4:4,2,3@4+;F1:3,4@3+;F5.2:3,2,4@3-;F5.1:3,2,4@3-;F4:2,1,3@2-;F1:2,1@0+",
      "4 1,2,0,0 K 1 0 F5.1:1,4,2@3+;F5.1:4,1,2@2+;F5.2:2,1,4@4+;F5.2:2,4,1@3+;F5.1:1,3,2@1+;F5.2:2,1,3@2+;F5.1:3,1,2@0+;F5.2:2,3,1@1+",
      "4 1,2,0,0 K 2 0 F5.1:2,1,4@3-;F5.2:4,2,1@2-;F5.1:1,2,4@4-;F5.2:4,1,2@3-;F5.2:2,1,3@1+;F5.1:1,3,2@2+;F5.2:2,3,1@0+;F5.1:3,1,2@1+",
      "4 1,2,0,0 M 3 1 F5.1:3,1,4@3-;F5.2:4,3,1@2-;F1:3,1@0+;F5.2:4,3,1@0+;F5.1:3,1,4@1+",
      "4 1,2,0,0 M 3 2 F4:3,1,2@0+;F3:2,3,4,1@1+;F3:3,2,4,1@0+;F3:1,4,3,2@3+;F1:3,2@1+;F3:1,4,3,2@1-",
      "4 1,2,0,0 M 4 1 F1:4,1@2+",
      "4 1,2,0,0 M 4 2 F4:4,1,2@2+;F1:4,2@2+",
      "4 1,2,0,3 K 1 0 F3:1,2,3,4@0-;F3:2,1,3,4@1-",
      "4 1,2,0,3 K 2 0 F3:2,1,3,4@0-;F3:1,2,3,4@1-",
      "4 1,2,0,3 K 3 0 F4:3,1,4@1+;F2.2:3,4@0+;F2.1:4,3@0-;F2.2:3,4@0-;F4:3,1,4@1-;F5.2:1,4,3@2-;F5.1:4,3,1@1-;F4:3,1,4@0-",
      "4 1,2,0,3 M 4 1 ",
      "4 1,2,0,3 M 4 2 ",
      "4 1,2,0,3 M 4 3 F4:3,1,4@0-",
      "4 1,2,0,4 K 1 0 F5.1:1,3,2@1+;F5.2:2,1,3@2+;F5.1:3,1,2@0+;F5.2:2,3,1@1+",
      "4 1,2,0,4 K 2 0 F5.2:2,1,3@1+;F5.1:1,3,2@2+;F5.2:2,3,1@0+;F5.1:3,1,2@1+",
      "4 1,2,0,4 M 3 1 F1:3,1@0+",
      "4 1,2,0,4 M 3 2 F4:3,1,2@0+;F1:3,2@0+",
      "4 1,2,0,4 M 3 4 F4:3,1,4@0+;F1:3,4@0+",
      "4 1,2,0,4 K 4 0 ",
      "4 1,2,3,0 K 1 0 F5.1:1,4,2@1+;F5.2:2,1,4@2+;F5.1:4,1,2@0+;F5.2:2,4,1@1+",
      "4 1,2,3,0 K 2 0 F5.2:2,1,4@1+;F5.1:1,4,2@2+;F5.2:2,4,1@0+;F5.1:4,1,2@1+",
      "4 1,2,3,0 K 3 0 F5.2:3,1,4@1+;F5.1:1,4,3@2+;F5.2:3,4,1@0+;F5.1:4,1,3@1+",
      "4 1,2,3,0 M 4 1 F1:4,1@0+",
      "4 1,2,3,0 M 4 2 F4:4,1,2@0+;F1:4,2@0+",
      "4 1,2,3,0 M 4 3 F4:4,1,3@0+;F1:4,3@0+",
      "4 1,2,4,0 K 1 0 F3:1,2,4,3@0-;F3:2,1,4,3@1-",
      "4 1,2,4,0 K 2 0 F3:2,1,4,3@0-;F3:1,2,4,3@1-",
      "4 1,2,4,0 M 3 1 ",
      "4 1,2,4,0 M 3 2 ",
      "4 1,2,4,0 M 3 4 F4:4,1,3@0-",
      "4 1,2,4,0 K 4 0 F4:4,1,3@1+;F2.2:3,4@0-;F2.1:3,4@0-;F2.2:3,4@1+;F4:4,1,3@2-;F4:3,1,4@0-",
      "4 1,3,0,0 K 1 0 F5.2:3,1,2@2-;F5.1:1,4,2@1+;F5.2:3,2,1@3-;F5.2:2,1,4@2+;F5.1:4,1,2@0+;F5.2:2,4,1@1+",
      "4 1,3,0,0 M 2 1 ",
      "4 1,3,0,0 M 2 3 F3:1,4,3,2@1+;F3:3,2,4,1@0-;F3:1,4,2,3@2+;F3:2,3,4,1@1-;F4:3,1,2@0-",
      "4 1,3,0,0 K 3 0 F4:3,1,2@3+;F2.2:2,3@2-;F2.1:2,3@2+;F3:1,4,2,3@1+;F3:2,3,4,1@0-;F3:1,4,2,3@2+;F3:2,3,4,1@1-;F2.1:2,3@0-;F2.1:2,3@0-;F2.2:2,3@1+;F4:3,1,2@2-;F4:2,1,3@0-",
      "4 1,3,0,0 M 4 1 F3:3,2,4,1@2+;F1:4,1@0+",
      "4 1,3,0,0 M 4 3 F4:4,1,3@0+;F1:3,2@2-;F4:3,2,4@2+;F2.2:3,4@1+;F2.1:4,3@0+;F2.2:3,4@0-;F4:3,2,4@1-;F1:3,2@1+;F5.1:4,3,2@1-;F4:3,1,4@0-",
      "4 1,3,0,2 K 1 0 F5.1:1,2,4@1-;F5.1:2,1,4@2-;F5.2:3,1,2@0-;F5.2:3,2,1@1-",
      "4 1,3,0,2 K 2 0 F4:2,1,4@2+;F2.2:2,4@1+;F2.1:4,2@1-;F2.2:2,4@3-;F4:4,2,3@2+;F5.2:3,4,2@0-;F1:3,4@1+;F5.2:3,2,4@1-;F4:4,1,2@0-",
      "4 1,3,0,2 K 3 0 F4:3,1,2@2+;F5.1:3,2,4@1-;F1:3,4@2-;F4:3,2,4@2-;F2.1:3,2@0+;F4:3,2,4@1+;F1:3,4@1+;F5.1:2,3,4@1-;F4:3,1,2@0-",
      "4 1,3,0,2 M 4 1 ",
      "4 1,3,0,2 M 4 2 F4:2,3,4@1-;F1:3,2@0+",
      "4 1,3,0,2 M 4 3 F1:3,2@0-;F4:3,1,2@0-;F6:2,4,3@2+",
      "4 1,3,0,4 K 1 0 F5.2:3,1,2@0-;F5.2:3,2,1@1-",
      "4 1,3,0,4 M 2 1 ",
      "4 1,3,0,4 M 2 3 F4:3,1,2@0-",
      "4 1,3,0,4 M 2 4 ",
      "4 1,3,0,4 K 3 0 F4:3,1,2@1+;F2.2:2,3@0-;F2.1:2,3@0-;F2.2:2,3@1+;F4:3,1,2@2-;F4:2,1,3@0-",
      "4 1,3,0,4 K 4 0 F3:3,2,4,1@0+;F3:1,4,3,2@1-",
      "4 1,3,2,0 K 1 0 F7:3,2,1,4@1-;F4:1,2,4@5+;F2.2:1,4@4+;F2.1:4,1@4+;F5.2:2,4,1@3-;F3:3,2,4,1@2+;F5.1:4,1,3@1-;F7:3,2,4,1@2+;F2.1:4,1@0-;F2.2:1,4@2-;F2.2:1,4@0-;F2.2:1,4@1+;F4:1,2,4@0-",
      "4 1,3,2,0 K 2 0 F4:2,1,4@5+;F2.1:2,4@4-;F2.2:2,4@5+;F2.1:4,2@5+;F4:2,3,4@4-;F1:3,2@3+;F5.2:3,4,2@3-;F5.1:3,4,2@3-;F4:4,1,3@2-;F1:4,1@0+",
      "4 1,3,2,0 K 3 0 F6:2,3,4@2-;F4:3,1,4@5+;F2.1:3,4@4-;F2.2:3,4@5+;F2.1:4,3@5+;F4:3,2,4@4-;F1:2,3@3+;F5.2:2,4,3@3-;F5.1:2,4,3@3-;F4:4,1,2@2-;F1:4,1@0+",
      "4 1,3,2,0 M 4 1 F4:4,1,3@0+;F1:4,3@0+",
      "4 1,3,2,0 M 4 2 F4:2,3,4@4-;F1:3,2@3+;F4:4,1,3@0+;F1:4,3@0+",
      "4 1,3,2,0 M 4 3 F4:4,1,2@0+;F6:2,3,4@2-;F4:3,2,4@4-;F1:2,3@3+;F1:4,2@0+",
      "4 1,3,4,0 K 1 0 F5.2:3,1,2@1-;F5.2:3,2,1@2-;F3:1,2,4,3@0-;F3:2,1,4,3@1-",
      "4 1,3,4,0 M 2 1 ",
      "4 1,3,4,0 M 2 3 F4:3,2,4@1+;F1:4,3@0+",
      "4 1,3,4,0 M 2 4 F1:4,3@0-;F4:4,1,3@0-",
      "4 1,3,4,0 K 3 0 F4:3,1,2@2+;F2.2:2,3@1-;F2.1:2,3@1-;F2.2:2,3@3+;F4:2,3,4@2+;F5.2:4,2,3@0-;F1:4,2@1+;F5.2:4,3,2@1-;F4:2,1,3@0-",
      "4 1,3,4,0 K 4 0 F4:4,1,3@2+;F5.1:4,3,2@1-;F1:4,2@2-;F4:4,2,3@2+;F2.1:4,3@0+;F4:4,2,3@1-;F1:4,2@1+;F5.1:3,4,2@1-;F4:4,1,3@0-",
      "4 1,4,0,0 K 1 0 F5.2:4,1,2@2-;F5.1:1,3,2@1+;F5.2:4,2,1@3-;F5.2:2,1,3@2+;F5.1:3,1,2@0+;F5.2:2,3,1@1+",
      "4 1,4,0,0 M 2 1 ",
      "4 1,4,0,0 M 2 4 F4:4,1,2@2-",
      "4 1,4,0,0 M 3 1 F3:3,1,4,2@2-;F1:3,1@0+",
      "4 1,4,0,0 M 3 4 F4:3,1,4@0+;F1:4,2@2-;F4:4,2,3@2+;F2.2:3,4@1-;F2.1:3,4@0+;F2.2:3,4@0+;F4:4,2,3@1-;F1:4,2@1+;F5.1:3,4,2@1-;F4:4,1,3@0-",
      "4 1,4,0,0 K 4 0 F4:4,1,2@3+;F2.2:2,4@2-;F2.1:2,4@2-;F2.2:2,4@3+;F4:4,1,2@4-;F3:1,3,2,4@1+;F3:1,3,4,2@2+;F3:2,4,3,1@0-;F3:3,1,4,2@1+;F4:2,1,4@0-",
      "4 1,4,0,2 K 1 0 F7:4,2,1,3@1-;F4:1,2,3@5+;F2.2:1,3@4+;F2.1:3,1@4+;F5.2:2,3,1@3-;F3:3,1,4,2@2-;F5.1:3,1,4@1-;F7:4,2,3,1@2+;F2.1:3,1@0-;F2.2:1,3@2-;F2.2:1,3@0-;F2.2:1,3@1+;F4:1,2,3@0-",
      "4 1,4,0,2 K 2 0 F4:2,1,3@5+;F2.1:2,3@4-;F2.2:2,3@5+;F2.1:3,2@5+;F4:2,3,4@4+;F1:4,2@3+;F5.2:4,3,2@3-;F5.1:4,3,2@3-;F4:3,1,4@2-;F1:3,1@0+",
      "4 1,4,0,2 M 3 1 F4:3,1,4@0+;F1:3,4@0+",
      "4 1,4,0,2 M 3 2 F4:2,3,4@4+;F1:4,2@3+;F4:3,1,4@0+;F1:3,4@0+",
      "4 1,4,0,2 M 3 4 F4:3,1,2@0+;F6:2,4,3@2-;F4:4,2,3@4-;F1:2,4@3+;F1:3,2@0+",
      "4 1,4,0,2 K 4 0 F6:2,4,3@2-;F4:4,1,3@5+;F2.1:4,3@4-;F2.2:3,4@5-;F2.1:3,4@5+;F4:4,2,3@4-;F1:2,4@3+;F5.2:2,3,4@3-;F5.1:2,3,4@3-;F4:3,1,2@2-;F1:3,1@0+",
      "4 1,4,0,3 K 1 0 F5.2:4,1,2@1-;F5.2:4,2,1@2-;F3:1,2,3,4@0-;F3:2,1,3,4@1-",
      "4 1,4,0,3 M 2 1 ",
      "4 1,4,0,3 M 2 3 F1:3,4@0-;F4:3,1,4@0-",
      "4 1,4,0,3 M 2 4 F4:4,2,3@1+;F1:3,4@0+",
      "4 1,4,0,3 K 3 0 F4:3,1,4@2+;F5.1:3,4,2@1-;F1:3,2@2-;F4:3,2,4@2+;F2.1:3,4@0+;F4:3,2,4@1-;F1:3,2@1+;F5.1:4,3,2@1-;F4:3,1,4@0-",
      "4 1,4,0,3 K 4 0 F4:4,1,2@2+;F2.2:2,4@1-;F2.1:2,4@1-;F2.2:2,4@3+;F4:2,3,4@2-;F5.2:3,2,4@0-;F1:3,2@1+;F5.2:3,4,2@1-;F4:2,1,4@0-",
      "4 1,4,2,0 K 1 0 F5.1:1,2,3@1-;F5.1:2,1,3@2-;F5.2:4,1,2@0-;F5.2:4,2,1@1-",
      "4 1,4,2,0 K 2 0 F4:2,1,3@2+;F2.2:2,3@1+;F2.1:3,2@1-;F2.2:2,3@3-;F4:3,2,4@2+;F5.2:4,3,2@0-;F1:4,3@1+;F5.2:4,2,3@1-;F4:3,1,2@0-",
      "4 1,4,2,0 M 3 1 ",
      "4 1,4,2,0 M 3 2 F4:2,3,4@1+;F1:4,2@0+",
      "4 1,4,2,0 M 3 4 F1:4,2@0-;F4:4,1,2@0-;F6:2,3,4@2+",
      "4 1,4,2,0 K 4 0 F4:4,1,2@2+;F5.1:4,2,3@1-;F1:4,3@2-;F4:4,2,3@2-;F2.1:4,2@0+;F4:4,2,3@1+;F1:4,3@1+;F5.1:2,4,3@1-;F4:4,1,2@0-",
      "4 1,4,3,0 K 1 0 F5.2:4,1,2@0-;F5.2:4,2,1@1-",
      "4 1,4,3,0 M 2 1 ",
      "4 1,4,3,0 M 2 3 ",
      "4 1,4,3,0 M 2 4 F4:4,1,2@0-",
      "4 1,4,3,0 K 3 0 F3:3,1,4,2@0-;F3:1,3,4,2@1-",
      "4 1,4,3,0 K 4 0 F4:4,1,2@1+;F2.2:2,4@0-;F2.1:2,4@0-;F2.2:2,4@1+;F4:4,1,2@2-;F4:2,1,4@0-",
      "4 2,0,0,0 M 1 2 F5.1:2,1,4@3-;F5.2:4,2,1@2-;F5.1:1,2,4@4-;F5.2:4,1,2@3-;F5.2:2,1,3@1+;F5.1:1,3,2@2+;F5.2:2,3,1@0+;F5.1:3,1,2@1+",
      "4 2,0,0,0 K 2 0 F2.2:1,2@4-;F2.1:1,2@4+;F5.1:1,4,2@3+;F5.1:4,1,2@2+;F5.1:1,3,2@1+;F5.1:3,1,2@0+;F5.1:1,4,2@4+;F5.1:4,1,2@3+;F5.1:1,3,2@2+;F5.1:3,1,2@1+;F2.1:1,2@0-;F2.1:1,2@0-;F2.2:1,2@1+",
      "4 2,0,0,0 M 3 2 F1:3,1@0-;F4:1,2,3@1-;F5.1:2,1,4@5-;F5.2:4,2,1@4-;F5.1:2,1,3@3-;F5.1:3,2,4@6-;F5.2:4,3,2@5-;F4:2,1,3@4-;F2.1:2,1@2+;F4:1,2,3@1+;F1:3,1@0+;F5.2:3,2,1@0-;F5.2:3,1,2@1-;F5.2:4,3,1@2+;F5.1:3,1,4@3+",
      "4 2,0,0,0 M 4 2 F5.2:2,1,4@3+;F5.1:2,4,1@2-;F6:1,4,2@3+;F2.1:2,4@2-;F2.2:2,4@3+;F5.1:4,2,1@4+;F5.2:4,1,2@5-;F4:2,1,4@2-;F1:2,1@2+;F5.2:2,1,3@1+;F5.1:1,3,2@2+;F5.2:2,3,1@0+;F5.1:3,1,2@1+",
      "4 2,0,0,1 K 1 0 F4:1,2,4@4+;F2.2:1,4@3+;F5.2:2,4,1@2-;F2.1:4,1@4-;F2.2:1,4@5-;F4:4,1,2@4+;F1:2,4@3+;F5.2:2,1,4@3-",
      "4 2,0,0,1 K 2 0 F5.1:2,1,4@3-;F2.2:1,2@2-;F2.1:1,2@2-;F2.2:1,2@2+;F4:2,1,4@3+;F1:2,4@3+;F5.1:1,2,4@3-;F5.2:2,1,3@1+;F5.1:1,3,2@2+;F5.2:2,3,1@0+;F5.1:3,1,2@1+",
      "4 2,0,0,1 M 3 1 F5.2:2,1,3@1+;F1:2,3@1-;F4:3,1,2@2-;F2.2:1,3@3+;F2.1:3,1@2+;F5.2:2,3,1@0+;F2.2:1,3@1-;F4:1,3,4@2+;F1:1,4@2+;F5.1:3,1,4@2-;F4:1,2,3@1-;F1:2,1@0+",
      "4 2,0,0,1 M 3 2 F5.2:2,1,3@1+;F5.1:2,3,1@0-;F3:1,4,3,2@3+;F6:1,3,2@1+;F2.1:2,3@0-;F2.2:2,3@1+;F5.1:3,2,1@2+;F5.2:3,1,2@3-;F4:2,1,3@0-;F1:2,1@0+",
      "4 2,0,0,1 M 4 1 F4:1,2,4@3-;F1:2,1@2+",
      "4 2,0,0,1 M 4 2 F1:2,1@2-;F5.2:2,1,3@1+;F6:1,4,2@4+;F5.1:1,3,2@2+;F5.2:2,3,1@0+;F5.1:3,1,2@1+",
      "4 2,0,0,3 M 1 2 F3:1,2,3,4@1-",
      "4 2,0,0,3 M 1 3 F1:3,4@1-;F4:3,1,4@1-;F5.1:1,3,4@3-;F2.2:1,3@2+;F2.1:3,1@1-;F2.2:1,3@2-;F4:1,3,4@3+;F1:1,4@3+;F5.2:2,3,1@0-;F5.2:2,1,3@1-",
      "4 2,0,0,3 K 2 0 F3:2,1,3,4@1-;F2.2:1,2@0-;F2.1:1,2@0-;F3:1,2,3,4@3-;F2.2:1,2@1+",
      "4 2,0,0,3 K 3 0 F3:2,1,3,4@0+;F5.2:2,3,1@1-;F5.2:2,1,3@2-;F4:3,1,4@1+;F2.2:3,4@0+;F2.1:4,3@0-;F2.2:3,4@0-;F4:3,1,4@1-;F5.2:1,4,3@2-;F5.1:4,3,1@1-;F4:3,1,4@0-",
      "4 2,0,0,3 M 4 2 F1:2,1@0-;F4:2,1,4@0+;F3:2,1,3,4@2+;F5.2:3,4,2@1+;F5.1:4,2,1@3-;F2.2:2,4@2-;F2.1:2,4@2-;F2.2:2,4@2+;F4:4,1,2@3-;F1:4,1@3+;F5.2:3,4,2@1-;F4:2,1,4@0-",
      "4 2,0,0,3 M 4 3 F3:2,1,3,4@0+;F3:2,1,4,3@1+;F4:3,1,4@0-",
      "4 2,0,0,4 M 1 2 F5.2:2,1,3@1+;F5.1:1,3,2@2+;F5.2:2,3,1@0+;F5.1:3,1,2@1+",
      "4 2,0,0,4 M 1 4 ",
      "4 2,0,0,4 K 2 0 F5.1:2,1,3@1-;F5.2:3,2,1@0-;F5.1:2,3,1@2+;F5.1:3,2,1@1+;F2.2:1,2@0-;F5.1:1,2,3@3-;F5.2:3,1,2@2-;F2.1:1,2@0-;F2.2:1,2@1+",
      "4 2,0,0,4 M 3 2 F5.2:2,1,3@1+;F5.1:2,3,1@0-;F6:1,3,2@1+;F2.1:2,3@0-;F2.2:2,3@1+;F5.1:3,2,1@2+;F5.2:3,1,2@3-;F4:2,1,3@0-;F1:2,1@0+",
      "4 2,0,0,4 M 3 4 F4:3,1,4@0+;F3:2,1,4,3@1-;F3:2,1,3,4@0-;F1:3,4@1+",
      "4 2,0,0,4 K 4 0 F5.2:2,4,1@2-;F5.2:2,1,4@3-",
      "4 2,0,1,0 K 1 0 F4:1,2,3@4+;F2.2:1,3@3+;F5.2:2,3,1@2-;F5.1:3,1,4@1-;F5.2:4,3,1@0-;F2.1:3,1@4-;F2.2:1,3@5-;F4:3,1,2@4+;F1:2,3@3+;F5.2:2,1,3@3-;F5.1:1,3,4@2-;F5.2:4,1,3@1-",
      "4 2,0,1,0 K 2 0 F5.1:2,1,3@3-;F2.2:1,2@2-;F2.1:1,2@2-;F2.2:1,2@2+;F4:2,1,3@3+;F1:2,3@3+;F5.1:1,2,3@3-;F5.2:2,1,4@1+;F5.1:1,4,2@2+;F5.2:2,4,1@0+;F5.1:4,1,2@1+",
      "4 2,0,1,0 M 3 1 F4:1,2,3@3-;F1:2,1@2+",
      "4 2,0,1,0 M 3 2 F1:2,1@2-;F5.2:2,1,4@1+;F6:1,3,2@4+;F5.1:1,4,2@2+;F5.2:2,4,1@0+;F5.1:4,1,2@1+",
      "4 2,0,1,0 M 4 1 F5.2:2,1,4@1+;F1:2,4@1-;F4:4,1,2@2-;F2.2:1,4@3+;F2.1:4,1@2+;F5.2:2,4,1@0+;F2.2:1,4@1-;F4:1,3,4@2-;F1:1,3@2+;F5.1:4,1,3@2-;F4:1,2,4@1-;F1:2,1@0+",
      "4 2,0,1,0 M 4 2 F5.2:2,1,4@1+;F5.1:2,4,1@0-;F3:1,3,4,2@3+;F6:1,4,2@1+;F2.1:2,4@0-;F2.2:2,4@1+;F5.1:4,2,1@2+;F5.2:4,1,2@3-;F4:2,1,4@0-;F1:2,1@0+",
      "4 2,0,1,3 K 1 0 F4:1,2,3@3+;F5.1:1,3,4@2-;F2.2:1,3@1+;F2.1:3,1@1-;F2.2:1,3@1-;F4:1,3,4@2+;F1:1,4@2+;F5.1:3,1,4@2-;F4:1,2,3@1-;F1:2,1@0+",
      "4 2,0,1,3 K 2 0 F3:2,1,3,4@2-;F5.1:2,1,3@1-;F1:2,3@2-;F3:1,2,3,4@5-;F4:2,1,3@2-;F2.1:2,1@0+;F4:2,1,3@1+;F1:2,3@1+;F5.1:1,2,3@1-",
      "4 2,0,1,3 K 3 0 F1:2,1@0-;F4:1,2,4@1+;F5.1:3,4,1@4+;F5.1:4,1,3@3-;F4:4,1,3@4-;F2.1:4,1@2+;F4:1,2,4@1-;F1:2,1@0+;F5.2:2,4,1@0-;F5.2:2,1,4@1-",
      "4 2,0,1,3 M 4 1 F7:3,4,2,1@0-;F6:3,4,2@0+",
      "4 2,0,1,3 M 4 2 F1:2,1@0-;F4:2,1,3@0+;F6:1,2,3@1-;F7:3,4,1,2@2-;F4:3,1,2@1+;F4:2,1,3@0-",
      "4 2,0,1,3 M 4 3 F4:3,1,4@2-;F1:1,3@1+",
      "4 2,0,1,4 K 1 0 F4:1,2,3@2+;F2.2:1,3@1+;F5.2:2,3,1@0-;F2.1:3,1@2-;F2.2:1,3@3-;F4:3,1,2@2+;F1:2,3@1+;F5.2:2,1,3@1-",
      "4 2,0,1,4 K 2 0 F5.1:2,1,3@1-;F1:2,3@2-;F4:2,1,3@2-;F2.1:2,1@0+;F4:2,1,3@1+;F1:2,3@1+;F5.1:1,2,3@1-",
      "4 2,0,1,4 M 3 1 F4:1,2,3@1-;F1:2,1@0+",
      "4 2,0,1,4 M 3 2 F1:2,1@0-;F6:1,3,2@2+",
      "4 2,0,1,4 M 3 4 ",
      "4 2,0,1,4 K 4 0 F5.1:4,1,3@1-;F5.1:1,4,3@2-;F5.2:2,4,1@0-;F5.2:2,1,4@1-",
      "4 2,0,3,0 M 1 2 F5.2:2,1,4@1+;F5.1:1,4,2@2+;F5.2:2,4,1@0+;F5.1:4,1,2@1+",
      "4 2,0,3,0 M 1 3 ",
      "4 2,0,3,0 K 2 0 F5.1:2,1,4@1-;F5.2:4,2,1@0-;F5.1:2,4,1@2+;F5.1:4,2,1@1+;F2.2:1,2@0-;F5.1:1,2,4@3-;F5.2:4,1,2@2-;F2.1:1,2@0-;F2.2:1,2@1+",
      "4 2,0,3,0 K 3 0 F5.2:2,3,1@2-;F5.2:3,1,4@1+;F5.2:2,1,3@3-;F5.1:1,4,3@2+;F5.2:3,4,1@0+;F5.1:4,1,3@1+",
      "4 2,0,3,0 M 4 2 F5.2:2,1,4@1+;F5.1:2,4,1@0-;F6:1,4,2@1+;F2.1:2,4@0-;F2.2:2,4@1+;F5.1:4,2,1@2+;F5.2:4,1,2@3-;F4:2,1,4@0-;F1:2,1@0+",
      "4 2,0,3,0 M 4 3 F4:4,1,3@0+;F3:2,1,3,4@1-;F3:2,1,4,3@0-;F1:4,3@1+",
      "4 2,0,3,1 K 1 0 F4:1,2,4@2+;F2.2:1,4@1+;F5.2:2,4,1@0-;F2.1:4,1@2-;F2.2:1,4@3-;F4:4,1,2@2+;F1:2,4@1+;F5.2:2,1,4@1-",
      "4 2,0,3,1 K 2 0 F5.1:2,1,4@1-;F1:2,4@2-;F4:2,1,4@2-;F2.1:2,1@0+;F4:2,1,4@1+;F1:2,4@1+;F5.1:1,2,4@1-",
      "4 2,0,3,1 K 3 0 F5.1:3,1,4@1-;F5.1:1,3,4@2-;F5.2:2,3,1@0-;F5.2:2,1,3@1-",
      "4 2,0,3,1 M 4 1 F4:1,2,4@1-;F1:2,1@0+",
      "4 2,0,3,1 M 4 2 F1:2,1@0-;F6:1,4,2@2+",
      "4 2,0,3,1 M 4 3 ",
      "4 2,0,3,4 M 1 2 ",
      "4 2,0,3,4 M 1 3 ",
      "4 2,0,3,4 M 1 4 ",
      "4 2,0,3,4 K 2 0 F2.2:1,2@0-;F2.1:1,2@0-;F2.2:1,2@1+",
      "4 2,0,3,4 K 3 0 F5.2:2,3,1@0-;F5.2:2,1,3@1-",
      "4 2,0,3,4 K 4 0 F5.2:2,4,1@0-;F5.2:2,1,4@1-",
      "4 2,0,4,0 M 1 2 F3:1,2,4,3@1-",
      "4 2,0,4,0 M 1 4 F1:4,3@1-;F4:4,1,3@1-;F5.1:1,4,3@3-;F2.2:1,4@2+;F2.1:4,1@1-;F2.2:1,4@2-;F4:1,3,4@3-;F1:1,3@3+;F5.2:2,4,1@0-;F5.2:2,1,4@1-",
      "4 2,0,4,0 K 2 0 F3:2,1,4,3@1-;F2.2:1,2@0-;F2.1:1,2@0-;F3:1,2,4,3@3-;F2.2:1,2@1+",
      "4 2,0,4,0 M 3 2 F1:2,1@0-;F4:2,1,3@0+;F3:2,1,4,3@2+;F5.2:4,3,2@1+;F5.1:3,2,1@3-;F2.2:2,3@2-;F2.1:2,3@2-;F2.2:2,3@2+;F4:3,1,2@3-;F1:3,1@3+;F5.2:4,3,2@1-;F4:2,1,3@0-",
      "4 2,0,4,0 M 3 4 F3:2,1,4,3@0+;F3:2,1,3,4@1+;F4:4,1,3@0-",
      "4 2,0,4,0 K 4 0 F3:2,1,4,3@0+;F5.2:2,4,1@1-;F5.2:2,1,4@2-;F4:4,1,3@1+;F2.2:3,4@0-;F2.1:3,4@0-;F2.2:3,4@1+;F4:4,1,3@2-;F4:3,1,4@0-",
      "4 2,0,4,1 K 1 0 F4:1,2,4@3+;F5.1:1,4,3@2-;F2.2:1,4@1+;F2.1:4,1@1-;F2.2:1,4@1-;F4:1,3,4@2-;F1:1,3@2+;F5.1:4,1,3@2-;F4:1,2,4@1-;F1:2,1@0+",
      "4 2,0,4,1 K 2 0 F3:2,1,4,3@2-;F5.1:2,1,4@1-;F1:2,4@2-;F3:1,2,4,3@5-;F4:2,1,4@2-;F2.1:2,1@0+;F4:2,1,4@1+;F1:2,4@1+;F5.1:1,2,4@1-",
      "4 2,0,4,1 M 3 1 F7:4,3,2,1@0-",
      "4 2,0,4,1 M 3 2 F1:2,1@0-;F4:2,1,4@0+;F6:1,2,4@1-;F7:4,3,1,2@2-;F4:4,1,2@1+;F4:2,1,4@0-",
      "4 2,0,4,1 M 3 4 F4:4,1,3@2-;F1:1,4@1+",
      "4 2,0,4,1 K 4 0 F1:2,1@0-;F4:1,2,3@1+;F5.1:4,3,1@4+;F5.1:3,1,4@3-;F4:3,1,4@4-;F2.1:3,1@2+;F4:1,2,3@1-;F1:2,1@0+;F5.2:2,3,1@0-;F5.2:2,1,3@1-",
      "4 2,0,4,3 M 1 2 F7:4,3,2,1@0+;F7:4,3,1,2@1+",
      "4 2,0,4,3 M 1 3 F7:2,1,4,3@1-;F4:2,1,4@0-;F1:2,1@0+",
      "4 2,0,4,3 M 1 4 F6:3,4,2@0-;F7:3,4,2,1@0+;F4:4,1,3@3+;F1:3,4@2+",
      "4 2,0,4,3 K 2 0 F7:4,3,2,1@0+;F5.2:3,2,1@3-;F3:2,1,4,3@2-;F5.2:3,1,2@4-;F3:1,2,4,3@3-;F5.1:2,1,4@1-;F5.1:1,2,4@2-;F2.2:1,2@0-;F2.1:1,2@0-;F2.2:1,2@1+",
      "4 2,0,4,3 K 3 0 F7:4,3,2,1@0+;F2.1:3,1@3-;F2.2:1,3@4-;F2.1:1,3@4+;F4:3,1,4@3+;F1:4,3@2+;F5.2:4,1,3@2-;F5.1:4,1,3@2-;F4:1,2,4@1-;F1:2,1@0+",
      "4 2,0,4,3 K 4 0 F6:3,4,2@0-;F7:3,4,2,1@0+;F2.1:4,1@3-;F2.2:1,4@4-;F2.1:1,4@4+;F4:4,1,3@3+;F1:3,4@2+;F5.2:3,1,4@2-;F5.1:3,1,4@2-;F4:1,2,3@1-;F1:2,1@0+",
      "4 2,1,0,0 K 1 0 F4:1,2,3@7+;F2.1:1,3@6-;F2.2:1,3@7+;F2.1:3,1@7+;F4:1,2,3@6-;F1:2,1@5+;F5.2:2,3,1@5-;F5.1:2,3,1@5-;F3:1,4,3,2@3+;F3:1,4,2,3@4+;F3:3,2,4,1@2-;F3:2,3,4,1@3-;F4:3,1,2@2-;F1:3,1@0+",
      "4 2,1,0,0 K 2 0 F5.1:2,1,3@6-;F2.1:2,1@5-;F2.2:1,2@6-;F5.1:1,2,3@8-;F2.1:1,2@6+;F4:2,1,3@5+;F5.1:1,2,3@7+;F1:3,2@4+;F3:1,4,3,2@3+;F3:1,4,2,3@4+;F3:3,2,4,1@2-;F3:2,3,4,1@3-;F4:3,1,2@2-;F1:3,1@0+",
      "4 2,1,0,0 M 3 1 F4:3,1,2@0+;F3:2,3,4,1@1+;F3:3,2,4,1@0+;F3:1,4,2,3@2-;F4:1,2,3@6-;F1:2,1@5+;F3:1,4,3,2@1-;F1:3,2@2+",
      "4 2,1,0,0 M 3 2 F5.1:4,1,3@1-;F5.2:3,4,1@0-;F5.1:1,4,3@2-;F5.2:3,1,4@1-;F6:1,3,2@5+;F4:3,1,2@4-;F1:3,1@2+;F1:3,1@2+",
      "4 2,1,0,0 M 4 1 F4:4,1,3@2+;F5.1:4,1,3@6-;F5.2:2,4,1@5-;F5.1:2,4,1@5-;F3:2,1,4,3@6+;F6:2,4,3@4+;F2.2:3,4@3+;F2.1:4,3@2+;F4:3,1,4@0+;F2.1:4,3@1+;F5.1:4,3,2@2+;F5.2:4,2,3@3-;F4:3,1,2@2-;F4:3,1,4@0-;F1:3,1@0+",
      "4 2,1,0,0 M 4 2 F5.1:4,1,3@1-;F5.1:1,4,3@2-;F6:1,2,3@4-;F4:1,3,4@3+;F2.2:1,4@2+;F2.1:4,1@1+;F2.1:4,1@1+;F5.1:4,2,3@4-;F5.2:1,4,2@3-;F5.1:1,4,2@3-;F3:1,2,4,3@4+;F4:4,1,3@2+;F1:4,3@2+;F5.1:4,1,3@1+",
      "4 2,1,0,3 K 1 0 F7:2,1,3,4@0+;F5.1:1,4,2@3+;F5.2:1,4,2@3+;F4:2,1,4@2+;F2.1:4,2@3-;F2.2:2,4@3-;F2.1:2,4@2+;F4:2,1,4@3-;F1:2,1@3+;F4:4,2,3@1+;F1:3,4@0+;F3:2,1,3,4@0-",
      "4 2,1,0,3 K 2 0 F7:2,1,3,4@0+;F5.1:2,1,4@3-;F2.1:2,1@2-;F2.2:1,2@3-;F5.1:1,2,4@5-;F2.1:1,2@3+;F5.1:1,2,4@4+;F4:2,1,4@2+;F1:4,2@1+;F4:4,2,3@1+;F1:3,4@0+;F3:1,2,3,4@0-",
      "4 2,1,0,3 K 3 0 F6:1,2,3@0-;F4:3,1,4@4+;F2.2:3,4@3+;F5.2:2,4,3@2-;F3:1,2,4,3@1+;F2.1:4,3@4-;F2.2:3,4@4-;F4:3,1,4@5-;F5.2:2,3,4@3-;F3:1,2,3,4@2+;F6:2,3,1@3+;F5.1:1,3,4@2-;F5.2:4,1,3@1-",
      "4 2,1,0,3 M 4 1 F7:3,4,2,1@1-;F4:3,2,4@0+;F1:3,4@0+",
      "4 2,1,0,3 M 4 2 F6:1,2,3@0-;F7:1,2,3,4@0+;F4:2,1,4@3-;F1:1,2@2+",
      "4 2,1,0,3 M 4 3 F6:1,2,3@0-;F4:3,1,4@3-;F6:2,3,1@1+",
      "4 2,1,0,4 K 1 0 F6:2,3,1@1-;F4:1,2,3@5+;F2.2:1,3@4+;F2.1:3,1@3+;F2.1:3,1@3+;F6:2,3,1@1+;F5.2:2,3,1@3-;F5.1:2,3,1@3-;F4:3,1,2@2-;F1:3,1@0+",
      "4 2,1,0,4 K 2 0 F6:2,3,1@1-;F4:3,1,2@3+;F4:2,1,3@5+;F2.2:2,3@4+;F2.1:3,2@3+;F2.1:3,2@3+;F4:2,1,3@2-;F1:1,2@1+;F5.2:1,3,2@1-;F5.1:1,3,2@1-",
      "4 2,1,0,4 M 3 1 F4:1,2,3@4-;F1:2,1@3+;F4:3,1,2@0+;F1:3,2@0+",
      "4 2,1,0,4 M 3 2 F6:1,3,2@3+;F4:3,1,2@2-;F1:3,1@0+;F1:3,1@0+",
      "4 2,1,0,4 M 3 4 F4:3,1,2@0+;F1:3,2@0+",
      "4 2,1,0,4 K 4 0 F5.1:4,1,3@4-;F5.2:2,4,1@3-;F5.1:1,4,3@5-;F5.2:2,1,4@4-;F3:3,2,4,1@2+;F3:1,4,3,2@3-",
      "4 2,1,3,0 K 1 0 F6:2,4,1@1-;F4:1,2,4@5+;F2.2:1,4@4+;F2.1:4,1@3+;F2.1:4,1@3+;F6:2,4,1@1+;F5.2:2,4,1@3-;F5.1:2,4,1@3-;F4:4,1,2@2-;F1:4,1@0+",
      "4 2,1,3,0 K 2 0 F6:2,4,1@1-;F4:4,1,2@3+;F4:2,1,4@5+;F2.2:2,4@4+;F2.1:4,2@3+;F2.1:4,2@3+;F4:2,1,4@2-;F1:1,2@1+;F5.2:1,4,2@1-;F5.1:1,4,2@1-",
      "4 2,1,3,0 K 3 0 F4:4,1,3@0+;F7:2,1,3,4@1-;F4:3,1,4@5+;F2.2:3,4@4+;F2.1:4,3@4+;F5.2:1,4,3@3-;F3:2,1,4,3@2+;F5.1:4,3,2@1-;F7:2,1,4,3@2+;F2.1:4,3@0-;F2.2:3,4@0-;F4:3,1,4@1-;F5.2:1,4,3@2-;F5.1:4,3,1@1-;F4:3,1,4@0-",
      "4 2,1,3,0 M 4 1 F4:1,2,4@4-;F1:2,1@3+;F4:4,1,2@0+;F1:4,2@0+",
      "4 2,1,3,0 M 4 2 F6:1,4,2@3+;F4:4,1,2@2-;F1:4,1@0+;F1:4,1@0+",
      "4 2,1,3,0 M 4 3 F4:4,1,2@0+;F1:4,2@0+",
      "4 2,1,4,0 K 1 0 F7:2,1,4,3@0+;F5.1:1,3,2@3+;F5.2:1,3,2@3+;F4:2,1,3@2+;F2.1:3,2@3-;F2.2:2,3@3-;F2.1:2,3@2+;F4:2,1,3@3-;F1:2,1@3+;F4:3,2,4@1+;F1:4,3@0+;F3:2,1,4,3@0-",
      "4 2,1,4,0 K 2 0 F7:2,1,4,3@0+;F5.1:2,1,3@3-;F2.1:2,1@2-;F2.2:1,2@3-;F5.1:1,2,3@5-;F2.1:1,2@3+;F5.1:1,2,3@4+;F4:2,1,3@2+;F1:3,2@1+;F4:3,2,4@1+;F1:4,3@0+;F3:1,2,4,3@0-",
      "4 2,1,4,0 M 3 1 F7:4,3,2,1@1-;F4:4,2,3@0+;F1:4,3@0+",
      "4 2,1,4,0 M 3 2 F6:1,2,4@0-;F7:1,2,4,3@0+;F4:2,1,3@3-;F1:1,2@2+",
      "4 2,1,4,0 M 3 4 F6:1,2,4@0-;F4:4,1,3@3-;F6:2,4,1@1+",
      "4 2,1,4,0 K 4 0 F7:2,1,4,3@0+;F5.2:4,1,3@3+;F3:2,1,4,3@2+;F5.1:4,3,2@1-;F5.1:1,3,4@4+;F3:2,1,3,4@3+;F5.1:3,4,2@2-;F2.2:3,4@0-;F2.1:3,4@0-;F2.2:3,4@1+;F4:4,1,3@2-;F4:3,1,4@0-",
      "4 2,3,0,0 M 1 2 F4:2,1,3@3+;F1:3,2@2+",
      "4 2,3,0,0 M 1 3 F3:1,4,3,2@1+;F1:3,2@1-;F3:1,4,3,2@3-;F3:3,2,4,1@0-;F3:2,3,4,1@1-;F4:3,1,2@0-",
      "4 2,3,0,0 K 2 0 F2.2:1,2@3-;F5.2:3,1,2@2-;F2.1:1,2@4-;F2.2:1,2@5+;F4:1,2,3@4+;F1:3,1@3+;F5.2:3,2,1@3-;F5.1:1,4,2@1+;F5.2:2,1,4@2+;F5.1:4,1,2@0+;F5.2:2,4,1@1+",
      "4 2,3,0,0 K 3 0 F4:3,1,2@4+;F5.1:3,2,1@3-;F2.2:2,3@2-;F2.1:2,3@2-;F2.2:2,3@2+;F4:3,1,2@3-;F1:3,1@3+;F5.1:2,3,1@3-;F3:1,4,3,2@1+;F3:1,4,2,3@2+;F3:3,2,4,1@0-;F3:2,3,4,1@1-;F4:3,1,2@0-",
      "4 2,3,0,0 M 4 2 F1:4,1@0-;F4:1,2,4@1-;F3:1,4,3,2@3+;F5.2:3,2,1@2+;F5.1:2,1,4@4-;F4:2,1,4@5-;F2.1:2,1@3+;F4:2,1,3@4+;F5.2:3,2,1@2-;F1:3,2@3+;F4:1,2,4@1+;F1:4,1@0+",
      "4 2,3,0,0 M 4 3 F4:4,1,3@0+;F1:3,2@2-;F4:3,2,4@2+;F2.2:3,4@1+;F2.1:4,3@0+;F3:2,1,4,3@4+;F2.2:3,4@0-;F4:3,2,4@1-;F1:3,2@1+;F5.1:4,3,2@1-;F4:3,1,4@0-",
      "4 2,3,0,1 K 1 0 F4:1,2,4@3+;F2.2:1,4@2+;F2.1:4,1@2-;F2.2:1,4@4-;F4:4,1,2@3+;F5.2:2,4,1@1-;F1:2,4@2+;F5.2:2,1,4@2-;F3:3,2,4,1@0+;F3:1,4,3,2@1-",
      "4 2,3,0,1 K 2 0 F5.1:2,1,4@2-;F2.2:1,2@1-;F2.1:1,2@1-;F2.2:1,2@1+;F4:2,1,4@2+;F1:2,4@2+;F5.1:1,2,4@2-;F4:2,1,3@1+;F1:3,2@0+",
      "4 2,3,0,1 K 3 0 F5.1:3,1,4@2-;F5.1:1,3,4@3-;F4:3,1,2@2+;F5.1:3,2,1@1-;F1:3,1@2-;F4:3,1,2@2+;F2.1:3,2@0+;F4:3,1,2@1-;F1:3,1@1+;F5.1:2,3,1@1-;F4:3,1,2@0-",
      "4 2,3,0,1 M 4 1 F4:1,2,4@2-;F1:2,1@1+",
      "4 2,3,0,1 M 4 2 F7:1,4,3,2@0-;F6:1,4,3@0+",
      "4 2,3,0,1 M 4 3 F1:3,2@0-;F4:2,3,4@1+;F7:2,1,4,3@2+;F6:3,4,2@1-;F4:3,1,2@0-",
      "4 2,3,0,4 M 1 2 F4:2,1,3@1+;F1:3,2@0+",
      "4 2,3,0,4 M 1 3 F1:3,2@0-;F4:3,1,2@0-",
      "4 2,3,0,4 M 1 4 ",
      "4 2,3,0,4 K 2 0 F2.2:1,2@1-;F2.1:1,2@1-;F2.2:1,2@3+;F4:1,2,3@2+;F5.2:3,1,2@0-;F1:3,1@1+;F5.2:3,2,1@1-",
      "4 2,3,0,4 K 3 0 F4:3,1,2@2+;F5.1:3,2,1@1-;F1:3,1@2-;F4:3,1,2@2+;F2.1:3,2@0+;F4:3,1,2@1-;F1:3,1@1+;F5.1:2,3,1@1-;F4:3,1,2@0-",
      "4 2,3,0,4 K 4 0 F5.2:2,4,1@1-;F5.2:2,1,4@2-;F3:3,2,4,1@0+;F3:1,4,3,2@1-",
      "4 2,3,1,0 K 1 0 F5.1:1,4,2@5+;F5.1:4,2,1@4-;F5.2:3,4,2@3-;F4:4,1,3@5+;F1:3,4@4+;F5.1:3,4,2@3-;F4:4,1,3@2-;F1:4,1@0+",
      "4 2,3,1,0 K 2 0 F4:2,1,3@6+;F3:1,4,2,3@5+;F5.1:2,1,3@4+;F5.2:2,1,3@4+;F5.1:1,3,4@5+;F4:3,2,4@3+;F1:4,3@2+;F4:4,1,3@2-;F1:4,1@0+",
      "4 2,3,1,0 K 3 0 F5.1:3,1,4@5-;F5.2:2,3,1@4-;F5.1:3,2,1@3+;F4:3,2,4@4+;F1:3,4@4+;F3:2,1,3,4@3+;F4:4,1,3@2-;F1:4,1@0+",
      "4 2,3,1,0 M 4 1 F4:4,1,3@0+;F1:4,3@0+;F4:1,2,4@3-;F1:2,1@2+",
      "4 2,3,1,0 M 4 2 F7:1,4,3,2@3-;F6:1,4,3@3+;F4:4,1,3@2-;F1:4,1@0+;F1:4,1@0+",
      "4 2,3,1,0 M 4 3 F4:4,1,2@0+;F6:3,4,2@1-;F7:2,1,4,3@3+;F4:3,2,4@2-;F1:2,3@1+;F4:2,3,4@1+;F1:4,2@0+",
      "4 2,3,4,0 M 1 2 F4:2,1,3@2+;F1:3,2@1+",
      "4 2,3,4,0 M 1 3 F7:2,1,4,3@0-",
      "4 2,3,4,0 M 1 4 F1:4,3@0-;F4:4,1,3@0-",
      "4 2,3,4,0 K 2 0 F2.2:1,2@2-;F2.1:1,2@2-;F2.2:1,2@4+;F4:1,2,3@3+;F5.2:3,1,2@1-;F1:3,1@2+;F5.2:3,2,1@2-;F3:1,2,4,3@0-;F3:2,1,4,3@1-",
      "4 2,3,4,0 K 3 0 F4:3,1,2@3+;F5.1:3,2,1@2-;F2.2:2,3@1-;F2.1:2,3@1-;F2.2:2,3@1+;F4:3,1,2@2-;F1:3,1@2+;F5.1:2,3,1@2-;F4:3,2,4@1+;F1:4,3@0+;F3:2,1,4,3@0-",
      "4 2,3,4,0 K 4 0 F5.2:2,4,1@2-;F5.2:2,1,4@3-;F4:4,1,3@2+;F5.1:4,3,2@1-;F1:4,2@2-;F4:4,2,3@2+;F2.1:4,3@0+;F4:4,2,3@1-;F1:4,2@1+;F5.1:3,4,2@1-;F4:4,1,3@0-",
      "4 2,4,0,0 M 1 2 F4:2,1,4@3+;F1:4,2@2+",
      "4 2,4,0,0 M 1 4 F1:3,1@0-;F4:1,3,4@1+;F3:1,3,4,2@3+;F5.1:4,1,2@2+;F5.1:2,1,3@4-;F5.2:4,2,1@3-;F4:1,2,4@2+;F2.1:1,4@1-;F2.2:1,4@2+;F2.1:4,1@2+;F4:1,3,4@1-;F5.2:3,4,1@2-;F6:2,4,3@3-;F5.1:1,4,3@5-;F5.2:2,1,4@4-;F3:1,4,3,2@3-",
      "4 2,4,0,0 K 2 0 F2.2:1,2@3-;F5.2:4,1,2@2-;F2.1:1,2@4-;F2.2:1,2@5+;F4:1,2,4@4+;F1:4,1@3+;F5.2:4,2,1@3-;F5.1:1,3,2@1+;F5.2:2,1,3@2+;F5.1:3,1,2@0+;F5.2:2,3,1@1+",
      "4 2,4,0,0 M 3 2 F1:3,1@0-;F4:1,2,3@1-;F3:1,3,4,2@3+;F5.2:4,2,1@2+;F5.1:2,1,3@4-;F4:2,1,3@5-;F2.1:2,1@3+;F4:2,1,4@4+;F5.2:4,2,1@2-;F1:4,2@3+;F4:1,2,3@1+;F1:3,1@0+",
      "4 2,4,0,0 M 3 4 F4:3,1,4@0+;F1:4,2@2-;F4:4,2,3@2+;F2.2:3,4@1-;F2.1:3,4@0+;F3:2,1,3,4@4+;F2.2:3,4@0+;F4:4,2,3@1-;F1:4,2@1+;F5.1:3,4,2@1-;F4:4,1,3@0-",
      "4 2,4,0,0 K 4 0 F4:4,1,2@4+;F5.1:4,2,1@3-;F2.2:2,4@2-;F2.1:2,4@2-;F2.2:2,4@2+;F4:4,1,2@3-;F1:4,1@3+;F5.1:2,4,1@3-;F4:4,1,2@2-",
      "4 2,4,0,1 K 1 0 F5.1:1,3,2@5+;F5.1:3,2,1@4-;F5.2:4,3,2@3-;F4:3,1,4@5+;F1:4,3@4+;F5.1:4,3,2@3-;F4:3,1,4@2-;F1:3,1@0+",
      "4 2,4,0,1 K 2 0 F4:2,1,4@6+;F3:1,3,2,4@5+;F5.1:2,1,4@4+;F5.2:2,1,4@4+;F5.1:1,4,3@5+;F4:4,2,3@3+;F1:3,4@2+;F4:3,1,4@2-;F1:3,1@0+",
      "4 2,4,0,1 M 3 1 F4:3,1,4@0+;F1:3,4@0+;F4:1,2,3@3-;F1:2,1@2+",
      "4 2,4,0,1 M 3 2 F7:1,3,4,2@3-;F6:1,3,4@3+;F4:3,1,4@2-;F1:3,1@0+;F1:3,1@0+",
      "4 2,4,0,1 M 3 4 F4:3,1,2@0+;F6:3,4,2@1+;F7:2,1,3,4@3+;F4:4,2,3@2-;F1:2,4@1+;F4:2,3,4@1-;F1:3,2@0+",
      "4 2,4,0,1 K 4 0 F5.1:4,1,3@5-;F5.2:2,4,1@4-;F5.1:4,2,1@3+;F4:4,2,3@4+;F1:4,3@4+;F3:2,1,4,3@3+;F4:3,1,4@2-;F1:3,1@0+",
      "4 2,4,0,3 M 1 2 F4:2,1,4@2+;F1:4,2@1+",
      "4 2,4,0,3 M 1 3 F1:3,4@0-;F4:3,1,4@0-",
      "4 2,4,0,3 M 1 4 F7:2,1,3,4@0-",
      "4 2,4,0,3 K 2 0 F2.2:1,2@2-;F2.1:1,2@2-;F2.2:1,2@4+;F4:1,2,4@3+;F5.2:4,1,2@1-;F1:4,1@2+;F5.2:4,2,1@2-;F3:1,2,3,4@0-;F3:2,1,3,4@1-",
      "4 2,4,0,3 K 3 0 F5.2:2,3,1@2-;F5.2:2,1,3@3-;F4:3,1,4@2+;F5.1:3,4,2@1-;F1:3,2@2-;F4:3,2,4@2+;F2.1:3,4@0+;F4:3,2,4@1-;F1:3,2@1+;F5.1:4,3,2@1-;F4:3,1,4@0-",
      "4 2,4,0,3 K 4 0 F4:4,1,2@3+;F5.1:4,2,1@2-;F2.2:2,4@1-;F2.1:2,4@1-;F2.2:2,4@1+;F4:4,1,2@2-;F1:4,1@2+;F5.1:2,4,1@2-;F4:4,2,3@1+;F1:3,4@0+;F3:2,1,3,4@0-",
      "4 2,4,1,0 K 1 0 F4:1,2,3@3+;F2.2:1,3@2+;F2.1:3,1@2-;F2.2:1,3@4-;F4:3,1,2@3+;F5.2:2,3,1@1-;F1:2,3@2+;F5.2:2,1,3@2-;F3:3,1,4,2@0-;F3:1,3,4,2@1-",
      "4 2,4,1,0 K 2 0 F5.1:2,1,3@2-;F2.2:1,2@1-;F2.1:1,2@1-;F2.2:1,2@1+;F4:2,1,3@2+;F1:2,3@2+;F5.1:1,2,3@2-;F4:2,1,4@1+;F1:4,2@0+",
      "4 2,4,1,0 M 3 1 F4:1,2,3@2-;F1:2,1@1+",
      "4 2,4,1,0 M 3 2 F7:1,3,4,2@0-;F6:1,3,4@0+",
      "4 2,4,1,0 M 3 4 F1:4,2@0-;F4:2,3,4@1-;F7:2,1,3,4@2+;F6:3,4,2@1+;F4:4,1,2@0-",
      "4 2,4,1,0 K 4 0 F5.1:4,1,3@2-;F5.1:1,4,3@3-;F4:4,1,2@2+;F5.1:4,2,1@1-;F1:4,1@2-;F4:4,1,2@2+;F2.1:4,2@0+;F4:4,1,2@1-;F1:4,1@1+;F5.1:2,4,1@1-;F4:4,1,2@0-",
      "4 2,4,3,0 M 1 2 F4:2,1,4@1+;F1:4,2@0+",
      "4 2,4,3,0 M 1 3 ",
      "4 2,4,3,0 M 1 4 F1:4,2@0-;F4:4,1,2@0-",
      "4 2,4,3,0 K 2 0 F2.2:1,2@1-;F2.1:1,2@1-;F2.2:1,2@3+;F4:1,2,4@2+;F5.2:4,1,2@0-;F1:4,1@1+;F5.2:4,2,1@1-",
      "4 2,4,3,0 K 3 0 F5.2:2,3,1@1-;F5.2:2,1,3@2-;F3:3,1,4,2@0-;F3:1,3,4,2@1-",
      "4 2,4,3,0 K 4 0 F4:4,1,2@2+;F5.1:4,2,1@1-;F1:4,1@2-;F4:4,1,2@2+;F2.1:4,2@0+;F4:4,1,2@1-;F1:4,1@1+;F5.1:2,4,1@1-;F4:4,1,2@0-",
      "4 3,0,0,0 M 1 3 F5.2:3,1,4@3+;F5.1:1,4,3@4+;F5.2:3,4,1@2+;F5.1:4,1,3@3+",
      "4 3,0,0,0 M 2 3 F1:2,1@0-;F4:1,2,3@1+;F5.1:3,1,4@5-;F5.2:4,3,1@4-;F5.1:3,1,2@3-;F5.1:2,3,4@6-;F5.2:4,2,3@5-;F4:3,1,2@4-;F2.1:3,1@2+;F4:1,2,3@1-;F1:2,1@0+;F5.2:2,3,1@0-;F5.2:2,1,3@1-;F5.2:4,2,1@2+;F5.1:2,1,4@3+",
      "4 3,0,0,0 K 3 0 F5.1:3,1,4@3-;F5.2:4,3,1@2-;F5.1:3,4,1@4+;F5.1:4,3,1@3+;F2.2:1,3@2-;F5.1:1,3,4@5-;F5.2:4,1,3@4-;F2.1:1,3@2-;F2.2:1,3@3+;F5.1:1,2,3@1+;F5.2:3,1,2@2+;F5.1:2,1,3@0+;F5.2:3,2,1@1+;F4:1,2,3@0-",
      "4 3,0,0,0 M 4 3 F5.2:3,1,4@3+;F5.1:3,4,1@2-;F6:1,4,3@3+;F2.1:3,4@2-;F2.2:3,4@3+;F5.1:4,3,1@4+;F5.2:4,1,3@5-;F4:3,1,4@2-;F1:3,1@2+",
      "4 3,0,0,1 K 1 0 F4:1,2,4@4+;F2.2:1,4@3+;F5.2:3,4,1@2-;F2.1:4,1@4-;F2.2:1,4@5-;F4:4,1,3@4+;F1:3,4@3+;F5.2:3,1,4@3-",
      "4 3,0,0,1 M 2 1 F5.2:3,1,2@1+;F1:3,2@1-;F4:2,1,3@2-;F2.2:1,2@3+;F2.1:2,1@2+;F5.2:3,2,1@0+;F2.2:1,2@1-;F4:1,2,4@2+;F1:1,4@2+;F5.1:2,1,4@2-;F4:1,2,3@1+;F1:3,1@0+",
      "4 3,0,0,1 M 2 3 F5.2:3,1,2@1+;F5.1:3,2,1@0-;F3:1,4,2,3@3+;F6:1,2,3@1+;F2.1:3,2@0-;F2.2:2,3@1-;F5.1:2,3,1@2+;F5.2:2,1,3@3-;F4:3,1,2@0-;F1:3,1@0+",
      "4 3,0,0,1 K 3 0 F5.1:3,1,4@3-;F1:3,4@4-;F4:3,1,4@4-;F2.1:3,1@2+;F4:3,1,4@3+;F1:3,4@3+;F5.1:1,3,4@3-",
      "4 3,0,0,1 M 4 1 F4:1,3,4@3-;F1:3,1@2+",
      "4 3,0,0,1 M 4 3 F5.1:3,1,2@1-;F3:1,4,3,2@2-;F1:3,2@3-;F4:3,1,2@3-;F5.1:4,3,2@5-;F5.2:1,4,3@4-;F5.2:4,3,1@3+;F4:1,3,4@2-;F2.1:3,1@3-;F2.2:1,3@3-;F2.1:1,3@2+;F4:1,2,3@3-;F6:1,4,2@4+;F5.1:1,3,2@2+;F5.1:3,1,2@1+",
      "4 3,0,0,2 M 1 2 F1:2,4@1-;F4:2,1,4@1-;F5.1:1,2,4@3-;F2.2:1,2@2+;F2.1:2,1@1-;F2.2:1,2@2-;F4:1,2,4@3+;F1:1,4@3+;F5.2:3,2,1@0-;F5.2:3,1,2@1-",
      "4 3,0,0,2 M 1 3 F3:1,3,2,4@1-",
      "4 3,0,0,2 K 2 0 F3:2,4,3,1@0-;F5.2:3,2,1@1-;F5.2:3,1,2@2-;F4:2,1,4@1+;F2.2:2,4@0+;F2.1:4,2@0-;F2.2:2,4@0-;F4:2,1,4@1-;F5.2:1,4,2@2-;F5.1:4,2,1@1-;F4:2,1,4@0-",
      "4 3,0,0,2 K 3 0 F3:2,4,3,1@1+;F2.2:1,3@0-;F3:1,3,2,4@2-;F2.1:1,3@0-;F2.2:1,3@1+;F4:1,2,3@0-",
      "4 3,0,0,2 M 4 2 F3:2,4,3,1@0-;F3:3,1,4,2@1+;F4:2,1,4@0-",
      "4 3,0,0,2 M 4 3 F1:3,1@0-;F4:3,1,4@0+;F3:2,4,3,1@2-;F5.2:2,4,3@1+;F5.1:4,3,1@3-;F2.2:3,4@2-;F2.1:3,4@2-;F2.2:3,4@2+;F4:4,1,3@3-;F1:4,1@3+;F5.2:2,4,3@1-;F4:3,1,4@0-",
      "4 3,0,0,4 M 1 3 ",
      "4 3,0,0,4 M 1 4 ",
      "4 3,0,0,4 M 2 3 F5.2:3,1,2@1+;F5.1:3,2,1@0-;F6:1,2,3@1+;F2.1:3,2@0-;F2.2:2,3@1-;F5.1:2,3,1@2+;F5.2:2,1,3@3-;F4:3,1,2@0-;F1:3,1@0+",
      "4 3,0,0,4 M 2 4 F4:2,1,4@0+;F3:3,1,4,2@1-;F3:2,4,3,1@0+;F1:2,4@1+",
      "4 3,0,0,4 K 3 0 F2.2:1,3@2-;F5.1:1,2,3@1+;F2.1:1,3@3-;F2.2:1,3@3+;F5.2:3,1,2@2+;F5.1:2,1,3@0+;F5.2:3,2,1@1+;F4:1,2,3@0-",
      "4 3,0,0,4 K 4 0 F5.2:3,4,1@2-;F5.2:3,1,4@3-",
      "4 3,0,1,0 K 1 0 F5.1:4,1,2@1-;F5.1:1,4,2@2-;F6:2,3,1@3+;F2.2:1,2@6+;F2.1:2,1@5+;F2.1:2,1@5+;F6:2,3,1@3-;F5.2:3,2,1@5-;F5.1:3,2,1@5-;F4:2,1,3@4-;F1:1,2@3+;F5.1:1,4,2@2+;F5.1:4,1,2@1+",
      "4 3,0,1,0 M 2 1 F4:2,1,3@0+;F3:3,2,4,1@1+;F3:2,3,4,1@0+;F3:1,4,3,2@2-;F4:1,2,3@6+;F1:3,1@5+;F3:1,4,2,3@1-;F1:2,3@2+",
      "4 3,0,1,0 M 2 3 F5.1:4,1,2@1-;F5.2:2,4,1@0-;F5.1:1,4,2@2-;F5.2:2,1,4@1-;F6:1,2,3@5+;F4:2,1,3@4-;F1:2,1@2+;F1:2,1@2+",
      "4 3,0,1,0 K 3 0 F5.1:3,1,2@6-;F2.1:3,1@5-;F2.2:1,3@6-;F5.1:1,3,2@8-;F2.1:1,3@6+;F4:3,1,2@5+;F5.1:1,3,2@7+;F1:2,3@4+;F3:1,4,2,3@3+;F3:1,4,3,2@4+;F3:2,3,4,1@2-;F3:3,2,4,1@3-;F4:2,1,3@2-;F1:2,1@0+",
      "4 3,0,1,0 M 4 1 F4:4,1,2@2+;F5.1:4,1,2@6-;F5.2:3,4,1@5-;F5.1:3,4,1@5-;F3:3,1,4,2@6+;F6:3,4,2@4+;F2.2:2,4@3+;F2.1:4,2@2+;F4:2,1,4@0+;F2.1:4,2@1+;F5.1:4,2,3@2+;F5.2:4,3,2@3-;F4:2,1,3@2-;F4:2,1,4@0-;F1:2,1@0+",
      "4 3,0,1,0 M 4 3 F5.1:4,1,2@1-;F5.1:1,4,2@2-;F6:1,3,2@4-;F4:1,2,4@3+;F2.2:1,4@2+;F2.1:4,1@1+;F2.1:4,1@1+;F5.1:4,3,2@4-;F5.2:1,4,3@3-;F5.1:1,4,3@3-;F3:1,3,4,2@4+;F4:4,1,2@2+;F1:4,2@2+;F5.1:4,1,2@1+",
      "4 3,0,1,2 K 1 0 F5.1:1,2,4@3-;F2.1:1,2@2-;F2.2:1,2@3+;F5.1:2,1,4@5-;F2.1:2,1@3+;F4:1,2,3@2+;F1:3,1@1+;F5.2:3,2,1@1-;F5.1:2,3,1@0+;F4:2,3,4@1+;F1:2,4@1+",
      "4 3,0,1,2 K 2 0 F6:1,3,2@0-;F4:2,1,4@4+;F2.2:2,4@3+;F5.2:3,4,2@2-;F3:1,3,4,2@1+;F2.1:4,2@4-;F2.2:2,4@4-;F4:2,1,4@5-;F5.2:3,2,4@3-;F3:1,3,2,4@2+;F6:2,3,1@3-;F5.1:1,2,4@2-;F5.2:4,1,2@1-",
      "4 3,0,1,2 K 3 0 F7:3,1,2,4@0+;F5.1:3,1,4@3-;F2.1:3,1@2-;F2.2:1,3@3-;F5.1:1,3,4@5-;F2.1:1,3@3+;F5.1:1,3,4@4+;F4:3,1,4@2+;F1:4,3@1+;F4:4,2,3@1-;F1:2,4@0+;F3:1,3,2,4@0-",
      "4 3,0,1,2 M 4 1 F7:2,4,3,1@1-;F4:2,3,4@0+;F1:2,4@0+",
      "4 3,0,1,2 M 4 2 F6:1,3,2@0-;F4:2,1,4@3-;F6:2,3,1@1-",
      "4 3,0,1,2 M 4 3 F6:1,3,2@0-;F7:1,3,2,4@0+;F4:3,1,4@3-;F1:1,3@2+",
      "4 3,0,1,4 K 1 0 F6:2,3,1@1+;F2.2:1,2@4+;F2.1:2,1@3+;F2.1:2,1@3+;F6:2,3,1@1-;F5.2:3,2,1@3-;F5.1:3,2,1@3-;F4:2,1,3@2-;F1:2,1@0+",
      "4 3,0,1,4 M 2 1 F4:1,2,3@4+;F1:3,1@3+;F4:2,1,3@0+;F1:2,3@0+",
      "4 3,0,1,4 M 2 3 F6:1,2,3@3+;F4:2,1,3@2-;F1:2,1@0+;F1:2,1@0+",
      "4 3,0,1,4 M 2 4 F4:2,1,3@0+;F1:2,3@0+",
      "4 3,0,1,4 K 3 0 F6:2,3,1@1+;F4:2,1,3@3+;F4:3,1,2@5+;F2.2:2,3@4-;F2.1:2,3@3+;F2.1:2,3@3+;F4:3,1,2@2-;F1:1,3@1+;F5.2:1,2,3@1-;F5.1:1,2,3@1-",
      "4 3,0,1,4 K 4 0 F5.1:4,1,2@4-;F5.2:3,4,1@3-;F5.1:1,4,2@5-;F5.2:3,1,4@4-;F3:2,3,4,1@2+;F3:1,4,2,3@3-",
      "4 3,0,2,0 M 1 2 F3:1,4,2,3@1+;F1:2,3@1-;F3:1,4,2,3@3-;F3:2,3,4,1@0-;F3:3,2,4,1@1-;F4:2,1,3@0-",
      "4 3,0,2,0 M 1 3 F4:3,1,2@3+;F1:2,3@2+",
      "4 3,0,2,0 K 2 0 F4:2,1,3@4+;F5.1:2,3,1@3-;F2.2:2,3@2+;F2.1:3,2@2-;F2.2:2,3@2-;F4:2,1,3@3-;F1:2,1@3+;F5.1:3,2,1@3-;F3:1,4,2,3@1+;F3:1,4,3,2@2+;F3:2,3,4,1@0-;F3:3,2,4,1@1-;F4:2,1,3@0-",
      "4 3,0,2,0 K 3 0 F2.2:1,3@3-;F5.2:2,1,3@2-;F5.1:1,4,3@1+;F5.1:4,1,3@0+;F2.1:1,3@4-;F2.2:1,3@4+;F4:3,1,2@5+;F5.2:2,3,1@3-;F1:2,3@4+;F5.2:3,1,4@2+;F5.2:3,4,1@1+;F4:1,2,3@0-",
      "4 3,0,2,0 M 4 2 F4:4,1,2@0+;F1:2,3@2-;F4:2,3,4@2+;F2.2:2,4@1+;F2.1:4,2@0+;F3:3,1,4,2@4+;F2.2:2,4@0-;F4:2,3,4@1-;F1:2,3@1+;F5.1:4,2,3@1-;F4:2,1,4@0-",
      "4 3,0,2,0 M 4 3 F1:4,1@0-;F4:1,3,4@1-;F3:1,4,2,3@3+;F5.2:2,3,1@2+;F5.1:3,1,4@4-;F4:3,1,4@5-;F2.1:3,1@3+;F4:3,1,2@4+;F5.2:2,3,1@2-;F1:2,3@3+;F4:1,3,4@1+;F1:4,1@0+",
      "4 3,0,2,1 K 1 0 F4:1,2,4@3+;F2.2:1,4@2+;F5.2:3,4,1@1-;F3:2,3,4,1@0+;F2.1:4,1@3-;F2.2:1,4@4-;F4:4,1,3@3+;F1:3,4@2+;F5.2:3,1,4@2-;F3:1,4,2,3@1-",
      "4 3,0,2,1 K 2 0 F5.1:2,1,4@2-;F5.1:1,2,4@3-;F4:2,1,3@2+;F5.1:2,3,1@1-;F1:2,1@2-;F4:2,1,3@2+;F2.1:2,3@0+;F4:2,1,3@1-;F1:2,1@1+;F5.1:3,2,1@1-;F4:2,1,3@0-",
      "4 3,0,2,1 K 3 0 F5.1:3,1,4@2-;F2.2:1,3@1-;F2.1:1,3@1-;F2.2:1,3@1+;F4:3,1,4@2+;F1:3,4@2+;F5.1:1,3,4@2-;F4:3,1,2@1+;F1:2,3@0+",
      "4 3,0,2,1 M 4 1 F4:1,3,4@2-;F1:3,1@1+",
      "4 3,0,2,1 M 4 2 F1:2,3@0-;F4:3,2,4@1+;F7:3,1,4,2@2+;F6:2,4,3@1-;F4:2,1,3@0-",
      "4 3,0,2,1 M 4 3 F7:1,4,2,3@0-;F6:1,4,2@0+",
      "4 3,0,2,4 M 1 2 F1:2,3@0-;F4:2,1,3@0-",
      "4 3,0,2,4 M 1 3 F4:3,1,2@1+;F1:2,3@0+",
      "4 3,0,2,4 M 1 4 ",
      "4 3,0,2,4 K 2 0 F4:2,1,3@2+;F5.1:2,3,1@1-;F1:2,1@2-;F4:2,1,3@2+;F2.1:2,3@0+;F4:2,1,3@1-;F1:2,1@1+;F5.1:3,2,1@1-;F4:2,1,3@0-",
      "4 3,0,2,4 K 3 0 F2.2:1,3@1-;F5.2:2,1,3@0-;F2.1:1,3@2-;F2.2:1,3@2+;F4:3,1,2@3+;F5.2:2,3,1@1-;F1:2,3@2+;F4:1,2,3@0-",
      "4 3,0,2,4 K 4 0 F5.2:3,4,1@1-;F5.2:3,1,4@2-;F3:2,3,4,1@0+;F3:1,4,2,3@1-",
      "4 3,0,4,0 M 1 3 F4:3,1,4@3+;F1:4,3@2+",
      "4 3,0,4,0 M 1 4 F1:2,1@0-;F4:1,2,4@1+;F3:1,2,4,3@3+;F5.1:4,1,3@2+;F5.1:3,1,2@4-;F5.2:4,3,1@3-;F4:1,3,4@2+;F2.1:1,4@1-;F2.2:1,4@2+;F2.1:4,1@2+;F4:1,2,4@1-;F5.2:2,4,1@2-;F6:3,4,2@3-;F5.1:1,4,2@5-;F5.2:3,1,4@4-;F3:1,4,2,3@3-",
      "4 3,0,4,0 M 2 3 F1:2,1@0-;F4:1,2,3@1+;F3:1,2,4,3@3+;F5.2:4,3,1@2+;F5.1:3,1,2@4-;F4:3,1,2@5-;F2.1:3,1@3+;F4:3,1,4@4+;F5.2:4,3,1@2-;F1:4,3@3+;F4:1,2,3@1-;F1:2,1@0+",
      "4 3,0,4,0 M 2 4 F4:2,1,4@0+;F1:4,3@2-;F4:4,2,3@2-;F2.2:2,4@1-;F2.1:2,4@0+;F3:2,4,3,1@4-;F2.2:2,4@0+;F4:4,2,3@1+;F1:4,3@1+;F5.1:2,4,3@1-;F4:4,1,2@0-",
      "4 3,0,4,0 K 3 0 F2.2:1,3@3-;F5.2:4,1,3@2-;F2.1:1,3@4-;F2.2:1,3@5+;F4:1,3,4@4+;F1:4,1@3+;F5.2:4,3,1@3-;F5.1:1,2,3@1+;F5.2:3,1,2@2+;F5.1:2,1,3@0+;F5.2:3,2,1@1+;F4:1,2,3@0-",
      "4 3,0,4,0 K 4 0 F4:4,1,3@4+;F5.1:4,3,1@3-;F2.2:3,4@2-;F2.1:3,4@2-;F2.2:3,4@2+;F4:4,1,3@3-;F1:4,1@3+;F5.1:3,4,1@3-;F4:4,1,3@2-",
      "4 3,0,4,1 K 1 0 F4:1,2,3@6+;F5.1:1,2,3@5+;F5.2:1,2,3@5+;F4:3,1,4@4+;F1:4,3@3+;F5.2:4,2,3@3-;F5.1:4,2,3@3-;F4:2,1,4@2-;F1:2,1@0+",
      "4 3,0,4,1 M 2 1 F4:2,1,4@0+;F1:2,4@0+;F4:1,2,3@3+;F1:3,1@2+",
      "4 3,0,4,1 M 2 3 F7:1,2,4,3@3-;F6:1,2,4@3+;F4:2,1,4@2-;F1:2,1@0+;F1:2,1@0+",
      "4 3,0,4,1 M 2 4 F4:2,1,3@0+;F6:2,4,3@1+;F7:3,1,2,4@3+;F4:4,2,3@2+;F1:3,4@1+;F4:3,2,4@1-;F1:2,3@0+",
      "4 3,0,4,1 K 3 0 F4:3,1,4@6+;F3:1,2,3,4@5+;F5.1:3,1,4@4+;F5.2:3,1,4@4+;F5.1:1,4,2@5+;F4:4,2,3@3-;F1:2,4@2+;F4:2,1,4@2-;F1:2,1@0+",
      "4 3,0,4,1 K 4 0 F5.1:4,1,2@5-;F5.2:3,4,1@4-;F5.1:4,3,1@3+;F4:4,2,3@4-;F1:4,2@4+;F3:3,1,4,2@3+;F4:2,1,4@2-;F1:2,1@0+",
      "4 3,0,4,2 M 1 2 F1:2,4@0-;F4:2,1,4@0-",
      "4 3,0,4,2 M 1 3 F4:3,1,4@2+;F1:4,3@1+",
      "4 3,0,4,2 M 1 4 F7:3,1,2,4@0-",
      "4 3,0,4,2 K 2 0 F5.2:3,2,1@2-;F5.2:3,1,2@3-;F4:2,1,4@2+;F5.1:2,4,3@1-;F1:2,3@2-;F4:2,3,4@2+;F2.1:2,4@0+;F4:2,3,4@1-;F1:2,3@1+;F5.1:4,2,3@1-;F4:2,1,4@0-",
      "4 3,0,4,2 K 3 0 F2.2:1,3@2-;F5.2:4,1,3@1-;F3:1,3,2,4@0-;F2.1:1,3@3-;F2.2:1,3@3+;F4:3,1,4@4+;F5.2:4,3,1@2-;F1:4,3@3+;F3:2,4,3,1@1+;F4:1,2,3@0-",
      "4 3,0,4,2 K 4 0 F4:4,1,3@3+;F5.1:4,3,1@2-;F2.2:3,4@1-;F2.1:3,4@1-;F2.2:3,4@1+;F4:4,1,3@2-;F1:4,1@2+;F5.1:3,4,1@2-;F4:4,2,3@1-;F1:2,4@0+;F3:2,4,3,1@0+",
      "4 3,1,0,0 K 1 0 F2.2:1,2@3+;F5.2:3,2,1@2-;F2.1:2,1@4-;F2.2:1,2@5-;F4:2,1,3@4+;F1:3,2@3+;F5.2:3,1,2@3-;F5.2:2,1,4@1+;F5.1:1,4,2@2+;F5.2:2,4,1@0+;F5.1:4,1,2@1+",
      "4 3,1,0,0 M 2 1 F4:1,2,3@3+;F1:3,1@2+",
      "4 3,1,0,0 M 2 3 F1:3,1@2-;F5.2:3,1,4@1+;F6:1,2,3@4+;F5.1:1,4,3@2+;F5.2:3,4,1@0+;F5.1:4,1,3@1+",
      "4 3,1,0,0 K 3 0 F5.1:3,1,2@3-;F2.2:1,3@2-;F2.1:1,3@2-;F2.2:1,3@2+;F4:3,1,2@3+;F1:3,2@3+;F5.1:1,3,2@3-;F5.2:3,1,4@1+;F5.1:1,4,3@2+;F5.2:3,4,1@0+;F5.1:4,1,3@1+",
      "4 3,1,0,0 M 4 1 F5.2:3,1,4@1+;F1:3,4@1-;F4:4,1,3@2-;F2.2:1,4@3+;F2.1:4,1@2+;F5.2:3,4,1@0+;F2.2:1,4@1-;F4:1,2,4@2-;F1:1,2@2+;F5.1:4,1,2@2-;F4:1,3,4@1-;F1:3,1@0+",
      "4 3,1,0,0 M 4 3 F5.2:3,1,4@1+;F5.1:3,4,1@0-;F3:1,2,4,3@3+;F6:1,4,3@1+;F2.1:3,4@0-;F2.2:3,4@1+;F5.1:4,3,1@2+;F5.2:4,1,3@3-;F4:3,1,4@0-;F1:3,1@0+",
      "4 3,1,0,2 K 1 0 F5.1:1,2,4@2-;F2.2:1,2@1+;F2.1:2,1@1-;F2.2:1,2@1-;F4:1,2,4@2+;F1:1,4@2+;F5.1:2,1,4@2-;F4:1,2,3@1+;F1:3,1@0+",
      "4 3,1,0,2 K 2 0 F1:3,1@0-;F4:1,3,4@1+;F5.1:2,4,1@4+;F5.1:4,1,2@3-;F4:4,1,2@4-;F2.1:4,1@2+;F4:1,3,4@1-;F1:3,1@0+;F5.2:3,4,1@0-;F5.2:3,1,4@1-",
      "4 3,1,0,2 K 3 0 F3:2,4,3,1@2+;F5.1:3,1,2@1-;F1:3,2@2-;F3:1,3,2,4@5-;F4:3,1,2@2-;F2.1:3,1@0+;F4:3,1,2@1+;F1:3,2@1+;F5.1:1,3,2@1-",
      "4 3,1,0,2 M 4 1 F7:2,4,3,1@0-;F6:2,4,3@0+",
      "4 3,1,0,2 M 4 2 F4:2,1,4@2-;F1:1,2@1+",
      "4 3,1,0,2 M 4 3 F1:3,1@0-;F4:3,1,2@0+;F6:1,3,2@1-;F7:2,4,1,3@2-;F4:2,1,3@1+;F4:3,1,2@0-",
      "4 3,1,0,4 K 1 0 F2.2:1,2@1+;F2.1:2,1@1-;F2.2:1,2@3-;F4:2,1,3@2+;F5.2:3,2,1@0-;F1:3,2@1+;F5.2:3,1,2@1-",
      "4 3,1,0,4 M 2 1 F4:1,2,3@1+;F1:3,1@0+",
      "4 3,1,0,4 M 2 3 F1:3,1@0-;F6:1,2,3@2+",
      "4 3,1,0,4 M 2 4 ",
      "4 3,1,0,4 K 3 0 F5.1:3,1,2@1-;F1:3,2@2-;F4:3,1,2@2-;F2.1:3,1@0+;F4:3,1,2@1+;F1:3,2@1+;F5.1:1,3,2@1-",
      "4 3,1,0,4 K 4 0 F5.1:4,1,2@1-;F5.1:1,4,2@2-;F5.2:3,4,1@0-;F5.2:3,1,4@1-",
      "4 3,1,2,0 K 1 0 F4:1,2,3@6+;F5.1:1,4,3@5+;F5.2:1,4,3@5+;F4:3,1,2@4+;F1:2,3@3+;F5.2:2,4,3@3-;F5.1:2,4,3@3-;F4:4,1,2@2-;F1:4,1@0+",
      "4 3,1,2,0 K 2 0 F5.1:2,1,4@5-;F5.2:3,2,1@4-;F5.1:2,3,1@3+;F4:2,3,4@4+;F1:2,4@4+;F3:2,4,3,1@3-;F4:4,1,2@2-;F1:4,1@0+",
      "4 3,1,2,0 K 3 0 F4:3,1,2@6+;F3:1,4,3,2@5+;F5.1:3,1,2@4+;F5.2:3,1,2@4+;F5.1:1,2,4@5+;F4:2,3,4@3+;F1:4,2@2+;F4:4,1,2@2-;F1:4,1@0+",
      "4 3,1,2,0 M 4 1 F4:4,1,2@0+;F1:4,2@0+;F4:1,3,4@3-;F1:3,1@2+",
      "4 3,1,2,0 M 4 2 F4:4,1,3@0+;F6:2,4,3@1-;F7:3,1,4,2@3+;F4:2,3,4@2-;F1:3,2@1+;F4:3,2,4@1+;F1:4,3@0+",
      "4 3,1,2,0 M 4 3 F7:1,4,2,3@3-;F6:1,4,2@3+;F4:4,1,2@2-;F1:4,1@0+;F1:4,1@0+",
      "4 3,1,4,0 K 1 0 F2.2:1,2@2+;F2.1:2,1@2-;F2.2:1,2@4-;F4:2,1,3@3+;F5.2:3,2,1@1-;F1:3,2@2+;F5.2:3,1,2@2-;F3:2,1,4,3@0-;F3:1,2,4,3@1-",
      "4 3,1,4,0 M 2 1 F4:1,2,3@2+;F1:3,1@1+",
      "4 3,1,4,0 M 2 3 F7:1,2,4,3@0-;F6:1,2,4@0+",
      "4 3,1,4,0 M 2 4 F1:4,3@0-;F4:3,2,4@1-;F7:3,1,2,4@2+;F6:2,4,3@1+;F4:4,1,3@0-",
      "4 3,1,4,0 K 3 0 F5.1:3,1,2@2-;F2.2:1,3@1-;F2.1:1,3@1-;F2.2:1,3@1+;F4:3,1,2@2+;F1:3,2@2+;F5.1:1,3,2@2-;F4:3,1,4@1+;F1:4,3@0+;F3:1,2,4,3@0-",
      "4 3,1,4,0 K 4 0 F5.1:4,1,2@2-;F5.1:1,4,2@3-;F4:4,1,3@2+;F5.1:4,3,1@1-;F1:4,1@2-;F4:4,1,3@2+;F2.1:4,3@0+;F4:4,1,3@1-;F1:4,1@1+;F5.1:3,4,1@1-;F4:4,1,3@0-",
      "4 3,2,0,0 M 1 2 ",
      "4 3,2,0,0 M 1 3 F5.2:3,1,4@1+;F5.1:1,4,3@2+;F5.2:3,4,1@0+;F5.1:4,1,3@1+",
      "4 3,2,0,0 K 2 0 F5.2:3,2,1@2-;F5.2:2,1,4@1+;F5.2:3,1,2@3-;F5.1:1,4,2@2+;F5.2:2,4,1@0+;F5.1:4,1,2@1+",
      "4 3,2,0,0 K 3 0 F2.2:1,3@2-;F2.1:1,3@2+;F5.1:1,4,3@1+;F5.1:4,1,3@0+;F5.1:1,4,3@2+;F5.1:4,1,3@1+;F2.1:1,3@0-;F2.1:1,3@0-;F2.2:1,3@1+;F4:1,2,3@0-",
      "4 3,2,0,0 M 4 2 F4:4,1,2@0+;F3:2,4,3,1@1+;F3:3,1,4,2@0-;F1:4,2@1+",
      "4 3,2,0,0 M 4 3 F5.2:3,1,4@1+;F5.1:3,4,1@0-;F6:1,4,3@1+;F2.1:3,4@0-;F2.2:3,4@1+;F5.1:4,3,1@2+;F5.2:4,1,3@3-;F4:3,1,4@0-;F1:3,1@0+",
      "4 3,2,0,1 K 1 0 F4:1,2,4@2+;F2.2:1,4@1+;F5.2:3,4,1@0-;F2.1:4,1@2-;F2.2:1,4@3-;F4:4,1,3@2+;F1:3,4@1+;F5.2:3,1,4@1-",
      "4 3,2,0,1 K 2 0 F5.1:2,1,4@1-;F5.1:1,2,4@2-;F5.2:3,2,1@0-;F5.2:3,1,2@1-",
      "4 3,2,0,1 K 3 0 F5.1:3,1,4@1-;F1:3,4@2-;F4:3,1,4@2-;F2.1:3,1@0+;F4:3,1,4@1+;F1:3,4@1+;F5.1:1,3,4@1-",
      "4 3,2,0,1 M 4 1 F4:1,3,4@1-;F1:3,1@0+",
      "4 3,2,0,1 M 4 2 ",
      "4 3,2,0,1 M 4 3 F1:3,1@0-;F6:1,4,3@2+",
      "4 3,2,0,4 M 1 2 ",
      "4 3,2,0,4 M 1 3 ",
      "4 3,2,0,4 M 1 4 ",
      "4 3,2,0,4 K 2 0 F5.2:3,2,1@0-;F5.2:3,1,2@1-",
      "4 3,2,0,4 K 3 0 F2.2:1,3@0-;F2.1:1,3@0-;F2.2:1,3@1+;F4:1,2,3@0-",
      "4 3,2,0,4 K 4 0 F5.2:3,4,1@0-;F5.2:3,1,4@1-",
      "4 3,2,1,0 K 1 0 F6:3,4,1@1-;F4:1,2,4@5+;F2.2:1,4@4+;F2.1:4,1@3+;F2.1:4,1@3+;F6:3,4,1@1+;F5.2:3,4,1@3-;F5.1:3,4,1@3-;F4:4,1,3@2-;F1:4,1@0+",
      "4 3,2,1,0 K 2 0 F4:4,1,2@0+;F7:3,1,2,4@1-;F4:2,1,4@5+;F2.2:2,4@4+;F2.1:4,2@4+;F5.2:1,4,2@3-;F3:3,1,4,2@2+;F5.1:4,2,3@1-;F7:3,1,4,2@2+;F2.1:4,2@0-;F2.2:2,4@0-;F4:2,1,4@1-;F5.2:1,4,2@2-;F5.1:4,2,1@1-;F4:2,1,4@0-",
      "4 3,2,1,0 K 3 0 F6:3,4,1@1-;F4:4,1,3@3+;F4:3,1,4@5+;F2.2:3,4@4+;F2.1:4,3@3+;F2.1:4,3@3+;F4:3,1,4@2-;F1:1,3@1+;F5.2:1,4,3@1-;F5.1:1,4,3@1-",
      "4 3,2,1,0 M 4 1 F4:1,3,4@4-;F1:3,1@3+;F4:4,1,3@0+;F1:4,3@0+",
      "4 3,2,1,0 M 4 2 F4:4,1,3@0+;F1:4,3@0+",
      "4 3,2,1,0 M 4 3 F6:1,4,3@3+;F4:4,1,3@2-;F1:4,1@0+;F1:4,1@0+",
      "4 3,2,4,0 M 1 2 ",
      "4 3,2,4,0 M 1 3 F4:3,1,4@1+;F1:4,3@0+",
      "4 3,2,4,0 M 1 4 F1:4,3@0-;F4:4,1,3@0-",
      "4 3,2,4,0 K 2 0 F5.2:3,2,1@1-;F5.2:3,1,2@2-;F3:2,1,4,3@0-;F3:1,2,4,3@1-",
      "4 3,2,4,0 K 3 0 F2.2:1,3@1-;F5.2:4,1,3@0-;F2.1:1,3@2-;F2.2:1,3@2+;F4:3,1,4@3+;F5.2:4,3,1@1-;F1:4,3@2+;F4:1,2,3@0-",
      "4 3,2,4,0 K 4 0 F4:4,1,3@2+;F5.1:4,3,1@1-;F1:4,1@2-;F4:4,1,3@2+;F2.1:4,3@0+;F4:4,1,3@1-;F1:4,1@1+;F5.1:3,4,1@1-;F4:4,1,3@0-",
      "4 3,4,0,0 M 1 3 F3:1,3,4,2@1-",
      "4 3,4,0,0 M 1 4 F1:4,2@1-;F4:4,1,2@1-;F5.1:1,4,2@3-;F2.2:1,4@2+;F2.1:4,1@1-;F2.2:1,4@2-;F4:1,2,4@3-;F1:1,2@3+;F5.2:3,4,1@0-;F5.2:3,1,4@1-",
      "4 3,4,0,0 M 2 3 F1:3,1@0-;F4:3,1,2@0+;F3:3,1,4,2@2+;F5.2:4,2,3@1+;F5.1:2,3,1@3-;F2.2:2,3@2+;F2.1:3,2@2-;F2.2:2,3@2-;F4:2,1,3@3-;F1:2,1@3+;F5.2:4,2,3@1-;F4:3,1,2@0-",
      "4 3,4,0,0 M 2 4 F3:3,1,4,2@0+;F3:2,4,3,1@1-;F4:4,1,2@0-",
      "4 3,4,0,0 K 3 0 F3:3,1,4,2@1-;F2.2:1,3@0-;F3:1,3,4,2@2-;F2.1:1,3@0-;F2.2:1,3@1+;F4:1,2,3@0-",
      "4 3,4,0,0 K 4 0 F3:3,1,4,2@0+;F5.2:3,4,1@1-;F5.2:3,1,4@2-;F4:4,1,2@1+;F2.2:2,4@0-;F2.1:2,4@0-;F2.2:2,4@1+;F4:4,1,2@2-;F4:2,1,4@0-",
      "4 3,4,0,1 K 1 0 F4:1,2,4@3+;F5.1:1,4,2@2-;F2.2:1,4@1+;F2.1:4,1@1-;F2.2:1,4@1-;F4:1,2,4@2-;F1:1,2@2+;F5.1:4,1,2@2-;F4:1,3,4@1-;F1:3,1@0+",
      "4 3,4,0,1 M 2 1 F7:4,2,3,1@0-",
      "4 3,4,0,1 M 2 3 F1:3,1@0-;F4:3,1,4@0+;F6:1,3,4@1-;F7:4,2,1,3@2-;F4:4,1,3@1+;F4:3,1,4@0-",
      "4 3,4,0,1 M 2 4 F4:4,1,2@2-;F1:1,4@1+",
      "4 3,4,0,1 K 3 0 F3:3,1,4,2@2-;F5.1:3,1,4@1-;F1:3,4@2-;F3:1,3,4,2@5-;F4:3,1,4@2-;F2.1:3,1@0+;F4:3,1,4@1+;F1:3,4@1+;F5.1:1,3,4@1-",
      "4 3,4,0,1 K 4 0 F1:3,1@0-;F4:1,2,3@1-;F5.1:4,2,1@4+;F5.1:2,1,4@3-;F4:2,1,4@4-;F2.1:2,1@2+;F4:1,2,3@1+;F1:3,1@0+;F5.2:3,2,1@0-;F5.2:3,1,2@1-",
      "4 3,4,0,2 M 1 2 F7:3,1,4,2@1-;F4:3,1,4@0-;F1:3,1@0+",
      "4 3,4,0,2 M 1 3 F7:4,2,3,1@0+;F7:4,2,1,3@1+",
      "4 3,4,0,2 M 1 4 F6:2,4,3@0-;F7:2,4,3,1@0+;F4:4,1,2@3+;F1:2,4@2+",
      "4 3,4,0,2 K 2 0 F7:4,2,3,1@0+;F2.1:2,1@3-;F2.2:1,2@4-;F2.1:1,2@4+;F4:2,1,4@3+;F1:4,2@2+;F5.2:4,1,2@2-;F5.1:4,1,2@2-;F4:1,3,4@1-;F1:3,1@0+",
      "4 3,4,0,2 K 3 0 F7:4,2,3,1@0+;F5.2:2,3,1@3-;F3:3,1,4,2@2-;F5.1:3,1,4@1-;F2.2:1,3@0-;F2.1:1,3@0-;F5.2:2,1,3@5-;F3:1,3,4,2@4-;F5.1:1,3,4@3-;F2.2:1,3@1+;F4:1,2,3@0-",
      "4 3,4,0,2 K 4 0 F6:2,4,3@0-;F7:2,4,3,1@0+;F2.1:4,1@3-;F2.2:1,4@4-;F2.1:1,4@4+;F4:4,1,2@3+;F1:2,4@2+;F5.2:2,1,4@2-;F5.1:2,1,4@2-;F4:1,2,3@1+;F1:3,1@0+",
      "4 3,4,1,0 K 1 0 F7:3,1,4,2@0+;F2.1:1,2@3-;F2.2:1,2@4+;F2.1:2,1@4+;F4:1,2,3@3+;F1:3,1@2+;F5.2:3,2,1@2-;F5.1:3,2,1@2-;F4:2,3,4@1+;F1:4,2@0+;F3:3,1,4,2@0-",
      "4 3,4,1,0 M 2 1 F7:4,2,3,1@1-;F4:4,2,3@0-;F1:4,2@0+",
      "4 3,4,1,0 M 2 3 F6:1,3,4@0-;F7:1,3,4,2@0+;F4:3,1,2@3-;F1:1,3@2+",
      "4 3,4,1,0 M 2 4 F6:1,3,4@0-;F4:4,1,2@3-;F6:3,4,1@1+",
      "4 3,4,1,0 K 3 0 F7:3,1,4,2@0+;F5.1:3,1,2@3-;F2.1:3,1@2-;F2.2:1,3@3-;F5.1:1,3,2@5-;F2.1:1,3@3+;F5.1:1,3,2@4+;F4:3,1,2@2+;F1:2,3@1+;F4:2,3,4@1+;F1:4,2@0+",
      "4 3,4,1,0 K 4 0 F7:3,1,4,2@0+;F5.2:4,1,2@3+;F3:3,1,4,2@2+;F5.1:4,2,3@1-;F5.1:1,2,4@4+;F3:2,4,3,1@3-;F5.1:2,4,3@2-;F2.2:2,4@0-;F2.1:2,4@0-;F2.2:2,4@1+;F4:4,1,2@2-;F4:2,1,4@0-",
      "4 3,4,2,0 M 1 2 F7:3,1,4,2@0-",
      "4 3,4,2,0 M 1 3 F4:3,1,2@2+;F1:2,3@1+",
      "4 3,4,2,0 M 1 4 F1:4,2@0-;F4:4,1,2@0-",
      "4 3,4,2,0 K 2 0 F4:2,1,3@3+;F5.1:2,3,1@2-;F2.2:2,3@1+;F2.1:3,2@1-;F2.2:2,3@1-;F4:2,1,3@2-;F1:2,1@2+;F5.1:3,2,1@2-;F4:2,3,4@1+;F1:4,2@0+;F3:3,1,4,2@0-",
      "4 3,4,2,0 K 3 0 F2.2:1,3@2-;F5.2:2,1,3@1-;F3:1,3,4,2@0-;F2.1:1,3@3-;F2.2:1,3@3+;F4:3,1,2@4+;F5.2:2,3,1@2-;F1:2,3@3+;F3:3,1,4,2@1-;F4:1,2,3@0-",
      "4 3,4,2,0 K 4 0 F5.2:3,4,1@2-;F5.2:3,1,4@3-;F4:4,1,2@2+;F5.1:4,2,3@1-;F1:4,3@2-;F4:4,2,3@2-;F2.1:4,2@0+;F4:4,2,3@1+;F1:4,3@1+;F5.1:2,4,3@1-;F4:4,1,2@0-",
      "4 4,0,0,0 M 1 4 ",
      "4 4,0,0,0 M 2 4 F5.1:3,1,2@1-;F5.2:2,3,1@0-;F5.1:1,3,2@2-;F5.2:2,1,3@1-;F1:2,1@2-;F4:1,2,4@3+;F5.1:4,1,2@5-;F4:4,1,2@6-;F2.1:4,1@4+;F4:1,2,4@3-;F1:2,1@2+;F5.2:2,4,1@2-;F5.2:2,1,4@3-",
      "4 4,0,0,0 M 3 4 F5.2:4,1,3@3+;F5.1:4,3,1@2-;F6:1,3,4@3+;F2.1:4,3@2-;F2.2:3,4@3-;F5.1:3,4,1@4+;F5.2:3,1,4@5-;F4:4,1,3@2-;F1:4,1@2+",
      "4 4,0,0,0 K 4 0 F2.2:1,4@4-;F5.1:1,3,4@3+;F5.1:3,1,4@2+;F2.1:1,4@5-;F2.2:1,4@5+;F5.2:4,1,3@4+;F5.2:4,3,1@3+;F5.1:1,2,4@1+;F5.2:4,1,2@2+;F5.1:2,1,4@0+;F5.2:4,2,1@1+;F4:1,2,4@0-",
      "4 4,0,0,1 K 1 0 F5.1:3,1,2@1-;F5.1:1,3,2@2-;F6:2,4,1@3+;F2.2:1,2@6+;F2.1:2,1@5+;F2.1:2,1@5+;F6:2,4,1@3-;F5.2:4,2,1@5-;F5.1:4,2,1@5-;F4:2,1,4@4-;F1:1,2@3+;F5.1:1,3,2@2+;F5.1:3,1,2@1+",
      "4 4,0,0,1 M 2 1 F4:2,1,4@0+;F3:3,1,4,2@1-;F3:2,4,3,1@0+;F3:1,3,4,2@2-;F4:1,2,4@6+;F1:4,1@5+;F3:1,3,2,4@1-;F1:2,4@2+",
      "4 4,0,0,1 M 2 4 F5.1:3,1,2@1-;F5.2:2,3,1@0-;F5.1:1,3,2@2-;F5.2:2,1,3@1-;F6:1,2,4@5+;F4:2,1,4@4-;F1:2,1@2+;F1:2,1@2+",
      "4 4,0,0,1 M 3 1 F4:3,1,2@2+;F5.1:3,1,2@6-;F5.2:4,3,1@5-;F5.1:4,3,1@5-;F3:3,2,4,1@6-;F6:3,4,2@4-;F2.2:2,3@3+;F2.1:3,2@2+;F4:2,1,3@0+;F2.1:3,2@1+;F5.1:3,2,4@2+;F5.2:3,4,2@3-;F4:2,1,4@2-;F4:2,1,3@0-;F1:2,1@0+",
      "4 4,0,0,1 M 3 4 F5.1:3,1,2@1-;F5.1:1,3,2@2-;F6:1,4,2@4-;F4:1,2,3@3+;F2.2:1,3@2+;F2.1:3,1@1+;F2.1:3,1@1+;F5.1:3,4,2@4-;F5.2:1,3,4@3-;F5.1:1,3,4@3-;F3:1,4,3,2@4+;F4:3,1,2@2+;F1:3,2@2+;F5.1:3,1,2@1+",
      "4 4,0,0,1 K 4 0 F5.1:4,1,2@6-;F2.1:4,1@5-;F2.2:1,4@6-;F5.1:1,4,2@8-;F2.1:1,4@6+;F4:4,1,2@5+;F5.1:1,4,2@7+;F1:2,4@4+;F3:1,3,2,4@3+;F3:1,3,4,2@4+;F3:2,4,3,1@2-;F3:3,1,4,2@3+;F4:2,1,4@2-;F1:2,1@0+",
      "4 4,0,0,2 M 1 2 F3:1,3,2,4@1+;F1:2,4@1-;F3:1,3,2,4@3-;F3:2,4,3,1@0-;F3:3,1,4,2@1+;F4:2,1,4@0-",
      "4 4,0,0,2 M 1 4 F4:4,1,2@3+;F1:2,4@2+",
      "4 4,0,0,2 K 2 0 F4:2,1,4@4+;F5.1:2,4,1@3-;F2.2:2,4@2+;F2.1:4,2@2-;F2.2:2,4@2-;F4:2,1,4@3-;F1:2,1@3+;F5.1:4,2,1@3-;F3:1,3,2,4@1+;F3:1,3,4,2@2+;F3:2,4,3,1@0-;F3:3,1,4,2@1+;F4:2,1,4@0-",
      "4 4,0,0,2 M 3 2 F4:3,1,2@0+;F1:2,4@2-;F4:2,3,4@2-;F2.2:2,3@1+;F2.1:3,2@0+;F3:3,2,4,1@4-;F2.2:2,3@0-;F4:2,3,4@1+;F1:2,4@1+;F5.1:3,2,4@1-;F4:2,1,3@0-",
      "4 4,0,0,2 M 3 4 F1:3,1@0-;F4:1,3,4@1+;F3:1,3,2,4@3+;F5.2:2,4,1@2+;F5.1:4,1,3@4-;F4:4,1,3@5-;F2.1:4,1@3+;F4:4,1,2@4+;F5.2:2,4,1@2-;F1:2,4@3+;F4:1,3,4@1-;F1:3,1@0+",
      "4 4,0,0,2 K 4 0 F2.2:1,4@3-;F5.2:2,1,4@2-;F5.1:1,3,4@1+;F5.1:3,1,4@0+;F2.1:1,4@4-;F2.2:1,4@4+;F4:4,1,2@5+;F5.2:2,4,1@3-;F1:2,4@4+;F5.2:4,1,3@2+;F5.2:4,3,1@1+;F4:1,2,4@0-",
      "4 4,0,0,3 M 1 3 F1:2,1@0-;F4:1,2,3@1+;F3:1,2,3,4@3+;F5.1:3,1,4@2+;F5.1:4,1,2@4-;F5.2:3,4,1@3-;F4:1,3,4@2-;F2.1:1,3@1-;F2.2:1,3@2+;F2.1:3,1@2+;F4:1,2,3@1-;F5.2:2,3,1@2-;F6:3,4,2@3+;F5.1:1,3,2@5-;F5.2:4,1,3@4-;F3:1,3,2,4@3-",
      "4 4,0,0,3 M 1 4 F4:4,1,3@3+;F1:3,4@2+",
      "4 4,0,0,3 M 2 3 F4:2,1,3@0+;F1:3,4@2-;F4:3,2,4@2-;F2.2:2,3@1-;F2.1:2,3@0+;F3:2,3,4,1@4-;F2.2:2,3@0+;F4:3,2,4@1+;F1:3,4@1+;F5.1:2,3,4@1-;F4:3,1,2@0-",
      "4 4,0,0,3 M 2 4 F1:2,1@0-;F4:1,2,4@1+;F3:1,2,3,4@3+;F5.2:3,4,1@2+;F5.1:4,1,2@4-;F4:4,1,2@5-;F2.1:4,1@3+;F4:4,1,3@4+;F5.2:3,4,1@2-;F1:3,4@3+;F4:1,2,4@1-;F1:2,1@0+",
      "4 4,0,0,3 K 3 0 F4:3,1,4@4+;F5.1:3,4,1@3-;F2.2:3,4@2+;F2.1:4,3@2-;F2.2:3,4@2-;F4:3,1,4@3-;F1:3,1@3+;F5.1:4,3,1@3-;F4:3,1,4@2-",
      "4 4,0,0,3 K 4 0 F2.2:1,4@3-;F5.2:3,1,4@2-;F2.1:1,4@4-;F2.2:1,4@5+;F4:1,3,4@4-;F1:3,1@3+;F5.2:3,4,1@3-;F5.1:1,2,4@1+;F5.2:4,1,2@2+;F5.1:2,1,4@0+;F5.2:4,2,1@1+;F4:1,2,4@0-",
      "4 4,0,1,0 K 1 0 F4:1,2,3@4+;F2.2:1,3@3+;F5.2:4,3,1@2-;F2.1:3,1@4-;F2.2:1,3@5-;F4:3,1,4@4+;F1:4,3@3+;F5.2:4,1,3@3-",
      "4 4,0,1,0 M 2 1 F5.2:4,1,2@1+;F1:4,2@1-;F4:2,1,4@2-;F2.2:1,2@3+;F2.1:2,1@2+;F5.2:4,2,1@0+;F2.2:1,2@1-;F4:1,2,3@2+;F1:1,3@2+;F5.1:2,1,3@2-;F4:1,2,4@1+;F1:4,1@0+",
      "4 4,0,1,0 M 2 4 F5.2:4,1,2@1+;F5.1:4,2,1@0-;F3:1,3,2,4@3+;F6:1,2,4@1+;F2.1:4,2@0-;F2.2:2,4@1-;F5.1:2,4,1@2+;F5.2:2,1,4@3-;F4:4,1,2@0-;F1:4,1@0+",
      "4 4,0,1,0 M 3 1 F4:1,3,4@3+;F1:4,1@2+",
      "4 4,0,1,0 M 3 4 F5.1:4,1,2@1-;F3:1,3,4,2@2-;F1:4,2@3-;F4:4,1,2@3-;F5.1:3,4,2@5-;F5.2:1,3,4@4-;F5.2:3,4,1@3+;F4:1,3,4@2+;F2.1:4,1@3-;F2.2:1,4@3-;F2.1:1,4@2+;F4:1,2,4@3-;F6:1,3,2@4+;F5.1:1,4,2@2+;F5.1:4,1,2@1+",
      "4 4,0,1,0 K 4 0 F5.1:4,1,3@3-;F1:4,3@4-;F4:4,1,3@4-;F2.1:4,1@2+;F4:4,1,3@3+;F1:4,3@3+;F5.1:1,4,3@3-",
      "4 4,0,1,2 K 1 0 F4:1,2,3@3+;F2.2:1,3@2+;F5.2:4,3,1@1-;F3:2,4,3,1@0+;F2.1:3,1@3-;F2.2:1,3@4-;F4:3,1,4@3+;F1:4,3@2+;F5.2:4,1,3@2-;F3:1,3,2,4@1-",
      "4 4,0,1,2 K 2 0 F5.1:2,1,3@2-;F5.1:1,2,3@3-;F4:2,1,4@2+;F5.1:2,4,1@1-;F1:2,1@2-;F4:2,1,4@2+;F2.1:2,4@0+;F4:2,1,4@1-;F1:2,1@1+;F5.1:4,2,1@1-;F4:2,1,4@0-",
      "4 4,0,1,2 M 3 1 F4:1,3,4@2+;F1:4,1@1+",
      "4 4,0,1,2 M 3 2 F1:2,4@0-;F4:4,2,3@1+;F7:4,1,3,2@2+;F6:2,3,4@1-;F4:2,1,4@0-",
      "4 4,0,1,2 M 3 4 F7:1,3,2,4@0-;F6:1,3,2@0+",
      "4 4,0,1,2 K 4 0 F5.1:4,1,3@2-;F2.2:1,4@1-;F2.1:1,4@1-;F2.2:1,4@1+;F4:4,1,3@2+;F1:4,3@2+;F5.1:1,4,3@2-;F4:4,1,2@1+;F1:2,4@0+;F3:1,3,2,4@0-",
      "4 4,0,1,3 K 1 0 F4:1,2,4@6+;F5.1:1,2,4@5+;F5.2:1,2,4@5+;F4:4,1,3@4+;F1:3,4@3+;F5.2:3,2,4@3-;F5.1:3,2,4@3-;F4:2,1,3@2-;F1:2,1@0+",
      "4 4,0,1,3 M 2 1 F4:2,1,3@0+;F1:2,3@0+;F4:1,2,4@3+;F1:4,1@2+",
      "4 4,0,1,3 M 2 3 F4:2,1,4@0+;F6:2,3,4@1+;F7:4,1,2,3@3+;F4:3,2,4@2+;F1:4,3@1+;F4:4,2,3@1-;F1:2,4@0+",
      "4 4,0,1,3 M 2 4 F7:1,2,3,4@3-;F6:1,2,3@3+;F4:2,1,3@2-;F1:2,1@0+;F1:2,1@0+",
      "4 4,0,1,3 K 3 0 F5.1:3,1,2@5-;F5.2:4,3,1@4-;F5.1:3,4,1@3+;F4:3,2,4@4-;F1:3,2@4+;F3:3,2,4,1@3-;F4:2,1,3@2-;F1:2,1@0+",
      "4 4,0,1,3 K 4 0 F4:4,1,3@6+;F3:1,2,4,3@5+;F5.1:4,1,3@4+;F5.2:4,1,3@4+;F5.1:1,3,2@5+;F4:3,2,4@3-;F1:2,3@2+;F4:2,1,3@2-;F1:2,1@0+",
      "4 4,0,2,0 M 1 2 F1:2,3@1-;F4:2,1,3@1-;F5.1:1,2,3@3-;F2.2:1,2@2+;F2.1:2,1@1-;F2.2:1,2@2-;F4:1,2,3@3+;F1:1,3@3+;F5.2:4,2,1@0-;F5.2:4,1,2@1-",
      "4 4,0,2,0 M 1 4 F3:1,4,2,3@1-",
      "4 4,0,2,0 K 2 0 F3:2,3,4,1@0-;F5.2:4,2,1@1-;F5.2:4,1,2@2-;F4:2,1,3@1+;F2.2:2,3@0+;F2.1:3,2@0-;F2.2:2,3@0-;F4:2,1,3@1-;F5.2:1,3,2@2-;F5.1:3,2,1@1-;F4:2,1,3@0-",
      "4 4,0,2,0 M 3 2 F3:2,3,4,1@0-;F3:3,2,4,1@1-;F4:2,1,3@0-",
      "4 4,0,2,0 M 3 4 F1:4,1@0-;F4:4,1,3@0+;F3:2,3,4,1@2-;F5.2:2,3,4@1+;F5.1:3,4,1@3-;F2.2:3,4@2+;F2.1:4,3@2-;F2.2:3,4@2-;F4:3,1,4@3-;F1:3,1@3+;F5.2:2,3,4@1-;F4:4,1,3@0-",
      "4 4,0,2,0 K 4 0 F3:2,3,4,1@1+;F2.2:1,4@0-;F3:1,4,2,3@2-;F2.1:1,4@0-;F2.2:1,4@1+;F4:1,2,4@0-",
      "4 4,0,2,1 K 1 0 F5.1:1,2,3@3-;F2.1:1,2@2-;F2.2:1,2@3+;F5.1:2,1,3@5-;F2.1:2,1@3+;F4:1,2,4@2+;F1:4,1@1+;F5.2:4,2,1@1-;F5.1:2,4,1@0+;F4:2,3,4@1-;F1:2,3@1+",
      "4 4,0,2,1 K 2 0 F6:1,4,2@0-;F4:2,1,3@4+;F2.2:2,3@3+;F5.2:4,3,2@2-;F3:1,4,3,2@1+;F2.1:3,2@4-;F2.2:2,3@4-;F4:2,1,3@5-;F5.2:4,2,3@3-;F3:1,4,2,3@2+;F6:2,4,1@3-;F5.1:1,2,3@2-;F5.2:3,1,2@1-",
      "4 4,0,2,1 M 3 1 F7:2,3,4,1@1-;F4:2,3,4@0-;F1:2,3@0+",
      "4 4,0,2,1 M 3 2 F6:1,4,2@0-;F4:2,1,3@3-;F6:2,4,1@1-",
      "4 4,0,2,1 M 3 4 F6:1,4,2@0-;F7:1,4,2,3@0+;F4:4,1,3@3-;F1:1,4@2+",
      "4 4,0,2,1 K 4 0 F7:4,1,2,3@0+;F5.1:4,1,3@3-;F2.1:4,1@2-;F2.2:1,4@3-;F5.1:1,4,3@5-;F2.1:1,4@3+;F5.1:1,4,3@4+;F4:4,1,3@2+;F1:3,4@1+;F4:3,2,4@1-;F1:2,3@0+",
      "4 4,0,2,3 M 1 2 F1:2,3@0-;F4:2,1,3@0-",
      "4 4,0,2,3 M 1 3 F7:4,1,2,3@0-",
      "4 4,0,2,3 M 1 4 F4:4,1,3@2+;F1:3,4@1+",
      "4 4,0,2,3 K 2 0 F5.2:4,2,1@2-;F5.2:4,1,2@3-;F4:2,1,3@2+;F5.1:2,3,4@1-;F1:2,4@2-;F4:2,3,4@2-;F2.1:2,3@0+;F4:2,3,4@1+;F1:2,4@1+;F5.1:3,2,4@1-;F4:2,1,3@0-",
      "4 4,0,2,3 K 3 0 F4:3,1,4@3+;F5.1:3,4,1@2-;F2.2:3,4@1+;F2.1:4,3@1-;F2.2:3,4@1-;F4:3,1,4@2-;F1:3,1@2+;F5.1:4,3,1@2-;F4:3,2,4@1-;F1:2,3@0+;F3:2,3,4,1@0+",
      "4 4,0,2,3 K 4 0 F2.2:1,4@2-;F5.2:3,1,4@1-;F3:1,4,2,3@0-;F2.1:1,4@3-;F2.2:1,4@3+;F4:4,1,3@4+;F5.2:3,4,1@2-;F1:3,4@3+;F3:2,3,4,1@1+;F4:1,2,4@0-",
      "4 4,0,3,0 M 1 3 ",
      "4 4,0,3,0 M 1 4 ",
      "4 4,0,3,0 M 2 3 F4:2,1,3@0+;F3:3,2,4,1@1+;F3:2,3,4,1@0+;F1:2,3@1+",
      "4 4,0,3,0 M 2 4 F5.2:4,1,2@1+;F5.1:4,2,1@0-;F6:1,2,4@1+;F2.1:4,2@0-;F2.2:2,4@1-;F5.1:2,4,1@2+;F5.2:2,1,4@3-;F4:4,1,2@0-;F1:4,1@0+",
      "4 4,0,3,0 K 3 0 F5.2:4,3,1@2-;F5.2:4,1,3@3-",
      "4 4,0,3,0 K 4 0 F2.2:1,4@2-;F5.1:1,2,4@1+;F2.1:1,4@3-;F2.2:1,4@3+;F5.2:4,1,2@2+;F5.1:2,1,4@0+;F5.2:4,2,1@1+;F4:1,2,4@0-",
      "4 4,0,3,1 K 1 0 F6:2,4,1@1+;F2.2:1,2@4+;F2.1:2,1@3+;F2.1:2,1@3+;F6:2,4,1@1-;F5.2:4,2,1@3-;F5.1:4,2,1@3-;F4:2,1,4@2-;F1:2,1@0+",
      "4 4,0,3,1 M 2 1 F4:1,2,4@4+;F1:4,1@3+;F4:2,1,4@0+;F1:2,4@0+",
      "4 4,0,3,1 M 2 3 F4:2,1,4@0+;F1:2,4@0+",
      "4 4,0,3,1 M 2 4 F6:1,2,4@3+;F4:2,1,4@2-;F1:2,1@0+;F1:2,1@0+",
      "4 4,0,3,1 K 3 0 F5.1:3,1,2@4-;F5.2:4,3,1@3-;F5.1:1,3,2@5-;F5.2:4,1,3@4-;F3:2,4,3,1@2+;F3:1,3,2,4@3-",
      "4 4,0,3,1 K 4 0 F6:2,4,1@1+;F4:2,1,4@3+;F4:4,1,2@5+;F2.2:2,4@4-;F2.1:2,4@3+;F2.1:2,4@3+;F4:4,1,2@2-;F1:1,4@1+;F5.2:1,2,4@1-;F5.1:1,2,4@1-",
      "4 4,0,3,2 M 1 2 F1:2,4@0-;F4:2,1,4@0-",
      "4 4,0,3,2 M 1 3 ",
      "4 4,0,3,2 M 1 4 F4:4,1,2@1+;F1:2,4@0+",
      "4 4,0,3,2 K 2 0 F4:2,1,4@2+;F5.1:2,4,1@1-;F1:2,1@2-;F4:2,1,4@2+;F2.1:2,4@0+;F4:2,1,4@1-;F1:2,1@1+;F5.1:4,2,1@1-;F4:2,1,4@0-",
      "4 4,0,3,2 K 3 0 F5.2:4,3,1@1-;F5.2:4,1,3@2-;F3:2,4,3,1@0+;F3:1,3,2,4@1-",
      "4 4,0,3,2 K 4 0 F2.2:1,4@1-;F5.2:2,1,4@0-;F2.1:1,4@2-;F2.2:1,4@2+;F4:4,1,2@3+;F5.2:2,4,1@1-;F1:2,4@2+;F4:1,2,4@0-",
      "4 4,1,0,0 K 1 0 F2.2:1,2@3+;F5.2:4,2,1@2-;F2.1:2,1@4-;F2.2:1,2@5-;F4:2,1,4@4+;F1:4,2@3+;F5.2:4,1,2@3-;F5.2:2,1,3@1+;F5.1:1,3,2@2+;F5.2:2,3,1@0+;F5.1:3,1,2@1+",
      "4 4,1,0,0 M 2 1 F4:1,2,4@3+;F1:4,1@2+",
      "4 4,1,0,0 M 2 4 F5.1:4,1,3@1-;F3:1,2,4,3@2-;F1:4,3@3-;F4:4,1,3@3-;F5.1:2,4,3@5-;F5.2:1,2,4@4-;F5.2:2,4,1@3+;F4:1,2,4@2+;F2.1:4,1@3-;F2.2:1,4@3-;F2.1:1,4@2+;F4:1,3,4@3-;F6:1,2,3@4+;F5.1:1,4,3@2+;F5.1:4,1,3@1+",
      "4 4,1,0,0 M 3 1 F5.2:4,1,3@1+;F1:4,3@1-;F4:3,1,4@2-;F2.2:1,3@3+;F2.1:3,1@2+;F5.2:4,3,1@0+;F2.2:1,3@1-;F4:1,2,3@2-;F1:1,2@2+;F5.1:3,1,2@2-;F4:1,3,4@1+;F1:4,1@0+",
      "4 4,1,0,0 M 3 4 F5.2:4,1,3@1+;F5.1:4,3,1@0-;F3:1,2,3,4@3+;F6:1,3,4@1+;F2.1:4,3@0-;F2.2:3,4@1-;F5.1:3,4,1@2+;F5.2:3,1,4@3-;F4:4,1,3@0-;F1:4,1@0+",
      "4 4,1,0,0 K 4 0 F5.1:4,1,2@3-;F1:4,2@4-;F4:4,1,2@4-;F2.1:4,1@2+;F4:4,1,2@3+;F1:4,2@3+;F5.1:1,4,2@3-",
      "4 4,1,0,2 K 1 0 F4:1,2,4@6+;F5.1:1,3,4@5+;F5.2:1,3,4@5+;F4:4,1,2@4+;F1:2,4@3+;F5.2:2,3,4@3-;F5.1:2,3,4@3-;F4:3,1,2@2-;F1:3,1@0+",
      "4 4,1,0,2 K 2 0 F5.1:2,1,3@5-;F5.2:4,2,1@4-;F5.1:2,4,1@3+;F4:2,3,4@4-;F1:2,3@4+;F3:2,3,4,1@3-;F4:3,1,2@2-;F1:3,1@0+",
      "4 4,1,0,2 M 3 1 F4:3,1,2@0+;F1:3,2@0+;F4:1,3,4@3+;F1:4,1@2+",
      "4 4,1,0,2 M 3 2 F4:3,1,4@0+;F6:2,3,4@1-;F7:4,1,3,2@3+;F4:2,3,4@2+;F1:4,2@1+;F4:4,2,3@1+;F1:3,4@0+",
      "4 4,1,0,2 M 3 4 F7:1,3,2,4@3-;F6:1,3,2@3+;F4:3,1,2@2-;F1:3,1@0+;F1:3,1@0+",
      "4 4,1,0,2 K 4 0 F4:4,1,2@6+;F3:1,3,4,2@5+;F5.1:4,1,2@4+;F5.2:4,1,2@4+;F5.1:1,2,3@5+;F4:2,3,4@3-;F1:3,2@2+;F4:3,1,2@2-;F1:3,1@0+",
      "4 4,1,0,3 K 1 0 F2.2:1,2@2+;F2.1:2,1@2-;F2.2:1,2@4-;F4:2,1,4@3+;F5.2:4,2,1@1-;F1:4,2@2+;F5.2:4,1,2@2-;F3:2,1,3,4@0-;F3:1,2,3,4@1-",
      "4 4,1,0,3 M 2 1 F4:1,2,4@2+;F1:4,1@1+",
      "4 4,1,0,3 M 2 3 F1:3,4@0-;F4:4,2,3@1-;F7:4,1,2,3@2+;F6:2,3,4@1+;F4:3,1,4@0-",
      "4 4,1,0,3 M 2 4 F7:1,2,3,4@0-;F6:1,2,3@0+",
      "4 4,1,0,3 K 3 0 F5.1:3,1,2@2-;F5.1:1,3,2@3-;F4:3,1,4@2+;F5.1:3,4,1@1-;F1:3,1@2-;F4:3,1,4@2+;F2.1:3,4@0+;F4:3,1,4@1-;F1:3,1@1+;F5.1:4,3,1@1-;F4:3,1,4@0-",
      "4 4,1,0,3 K 4 0 F5.1:4,1,2@2-;F2.2:1,4@1-;F2.1:1,4@1-;F2.2:1,4@1+;F4:4,1,2@2+;F1:4,2@2+;F5.1:1,4,2@2-;F4:4,1,3@1+;F1:3,4@0+;F3:1,2,3,4@0-",
      "4 4,1,2,0 K 1 0 F5.1:1,2,3@2-;F2.2:1,2@1+;F2.1:2,1@1-;F2.2:1,2@1-;F4:1,2,3@2+;F1:1,3@2+;F5.1:2,1,3@2-;F4:1,2,4@1+;F1:4,1@0+",
      "4 4,1,2,0 K 2 0 F1:4,1@0-;F4:1,3,4@1-;F5.1:2,3,1@4+;F5.1:3,1,2@3-;F4:3,1,2@4-;F2.1:3,1@2+;F4:1,3,4@1+;F1:4,1@0+;F5.2:4,3,1@0-;F5.2:4,1,3@1-",
      "4 4,1,2,0 M 3 1 F7:2,3,4,1@0-;F6:2,3,4@0+",
      "4 4,1,2,0 M 3 2 F4:2,1,3@2-;F1:1,2@1+",
      "4 4,1,2,0 M 3 4 F1:4,1@0-;F4:4,1,2@0+;F6:1,4,2@1-;F7:2,3,1,4@2-;F4:2,1,4@1+;F4:4,1,2@0-",
      "4 4,1,2,0 K 4 0 F3:2,3,4,1@2+;F5.1:4,1,2@1-;F1:4,2@2-;F3:1,4,2,3@5-;F4:4,1,2@2-;F2.1:4,1@0+;F4:4,1,2@1+;F1:4,2@1+;F5.1:1,4,2@1-",
      "4 4,1,3,0 K 1 0 F2.2:1,2@1+;F2.1:2,1@1-;F2.2:1,2@3-;F4:2,1,4@2+;F5.2:4,2,1@0-;F1:4,2@1+;F5.2:4,1,2@1-",
      "4 4,1,3,0 M 2 1 F4:1,2,4@1+;F1:4,1@0+",
      "4 4,1,3,0 M 2 3 ",
      "4 4,1,3,0 M 2 4 F1:4,1@0-;F6:1,2,4@2+",
      "4 4,1,3,0 K 3 0 F5.1:3,1,2@1-;F5.1:1,3,2@2-;F5.2:4,3,1@0-;F5.2:4,1,3@1-",
      "4 4,1,3,0 K 4 0 F5.1:4,1,2@1-;F1:4,2@2-;F4:4,1,2@2-;F2.1:4,1@0+;F4:4,1,2@1+;F1:4,2@1+;F5.1:1,4,2@1-",
      "4 4,2,0,0 M 1 2 ",
      "4 4,2,0,0 M 1 4 ",
      "4 4,2,0,0 K 2 0 F5.2:4,2,1@2-;F5.2:2,1,3@1+;F5.2:4,1,2@3-;F5.1:1,3,2@2+;F5.2:2,3,1@0+;F5.1:3,1,2@1+",
      "4 4,2,0,0 M 3 2 F4:3,1,2@0+;F3:2,3,4,1@1+;F3:3,2,4,1@0+;F1:3,2@1+",
      "4 4,2,0,0 M 3 4 F5.2:4,1,3@1+;F5.1:4,3,1@0-;F6:1,3,4@1+;F2.1:4,3@0-;F2.2:3,4@1-;F5.1:3,4,1@2+;F5.2:3,1,4@3-;F4:4,1,3@0-;F1:4,1@0+",
      "4 4,2,0,0 K 4 0 F2.2:1,4@2-;F5.1:1,3,4@1+;F2.1:1,4@3-;F2.2:1,4@3+;F5.2:4,1,3@2+;F5.1:3,1,4@0+;F5.2:4,3,1@1+;F4:1,2,4@0-",
      "4 4,2,0,1 K 1 0 F6:3,4,1@1+;F4:1,2,3@5+;F2.2:1,3@4+;F2.1:3,1@3+;F2.1:3,1@3+;F6:3,4,1@1-;F5.2:4,3,1@3-;F5.1:4,3,1@3-;F4:3,1,4@2-;F1:3,1@0+",
      "4 4,2,0,1 K 2 0 F4:3,1,2@0+;F7:4,1,2,3@1-;F4:2,1,3@5+;F2.2:2,3@4+;F2.1:3,2@4+;F5.2:1,3,2@3-;F3:3,2,4,1@2-;F5.1:3,2,4@1-;F7:4,1,3,2@2+;F2.1:3,2@0-;F2.2:2,3@0-;F4:2,1,3@1-;F5.2:1,3,2@2-;F5.1:3,2,1@1-;F4:2,1,3@0-",
      "4 4,2,0,1 M 3 1 F4:1,3,4@4+;F1:4,1@3+;F4:3,1,4@0+;F1:3,4@0+",
      "4 4,2,0,1 M 3 2 F4:3,1,4@0+;F1:3,4@0+",
      "4 4,2,0,1 M 3 4 F6:1,3,4@3+;F4:3,1,4@2-;F1:3,1@0+;F1:3,1@0+",
      "4 4,2,0,1 K 4 0 F6:3,4,1@1+;F4:3,1,4@3+;F4:4,1,3@5+;F2.2:3,4@4-;F2.1:3,4@3+;F2.1:3,4@3+;F4:4,1,3@2-;F1:1,4@1+;F5.2:1,3,4@1-;F5.1:1,3,4@1-",
      "4 4,2,0,3 M 1 2 ",
      "4 4,2,0,3 M 1 3 F1:3,4@0-;F4:3,1,4@0-",
      "4 4,2,0,3 M 1 4 F4:4,1,3@1+;F1:3,4@0+",
      "4 4,2,0,3 K 2 0 F5.2:4,2,1@1-;F5.2:4,1,2@2-;F3:2,1,3,4@0-;F3:1,2,3,4@1-",
      "4 4,2,0,3 K 3 0 F4:3,1,4@2+;F5.1:3,4,1@1-;F1:3,1@2-;F4:3,1,4@2+;F2.1:3,4@0+;F4:3,1,4@1-;F1:3,1@1+;F5.1:4,3,1@1-;F4:3,1,4@0-",
      "4 4,2,0,3 K 4 0 F2.2:1,4@1-;F5.2:3,1,4@0-;F2.1:1,4@2-;F2.2:1,4@2+;F4:4,1,3@3+;F5.2:3,4,1@1-;F1:3,4@2+;F4:1,2,4@0-",
      "4 4,2,1,0 K 1 0 F4:1,2,3@2+;F2.2:1,3@1+;F5.2:4,3,1@0-;F2.1:3,1@2-;F2.2:1,3@3-;F4:3,1,4@2+;F1:4,3@1+;F5.2:4,1,3@1-",
      "4 4,2,1,0 K 2 0 F5.1:2,1,3@1-;F5.1:1,2,3@2-;F5.2:4,2,1@0-;F5.2:4,1,2@1-",
      "4 4,2,1,0 M 3 1 F4:1,3,4@1+;F1:4,1@0+",
      "4 4,2,1,0 M 3 2 ",
      "4 4,2,1,0 M 3 4 F1:4,1@0-;F6:1,3,4@2+",
      "4 4,2,1,0 K 4 0 F5.1:4,1,3@1-;F1:4,3@2-;F4:4,1,3@2-;F2.1:4,1@0+;F4:4,1,3@1+;F1:4,3@1+;F5.1:1,4,3@1-",
      "4 4,2,3,0 M 1 2 ",
      "4 4,2,3,0 M 1 3 ",
      "4 4,2,3,0 M 1 4 ",
      "4 4,2,3,0 K 2 0 F5.2:4,2,1@0-;F5.2:4,1,2@1-",
      "4 4,2,3,0 K 3 0 F5.2:4,3,1@0-;F5.2:4,1,3@1-",
      "4 4,2,3,0 K 4 0 F2.2:1,4@0-;F2.1:1,4@0-;F2.2:1,4@1+;F4:1,2,4@0-",
      "4 4,3,0,0 M 1 3 F1:3,2@1-;F4:3,1,2@1-;F5.1:1,3,2@3-;F2.2:1,3@2+;F2.1:3,1@1-;F2.2:1,3@2-;F4:1,2,3@3-;F1:1,2@3+;F5.2:4,3,1@0-;F5.2:4,1,3@1-",
      "4 4,3,0,0 M 1 4 F3:1,4,3,2@1-",
      "4 4,3,0,0 M 2 3 F3:3,2,4,1@0-;F3:2,3,4,1@1-;F4:3,1,2@0-",
      "4 4,3,0,0 M 2 4 F1:4,1@0-;F4:4,1,2@0+;F3:3,2,4,1@2-;F5.2:3,2,4@1+;F5.1:2,4,1@3-;F2.2:2,4@2+;F2.1:4,2@2-;F2.2:2,4@2-;F4:2,1,4@3-;F1:2,1@3+;F5.2:3,2,4@1-;F4:4,1,2@0-",
      "4 4,3,0,0 K 3 0 F3:3,2,4,1@0-;F5.2:4,3,1@1-;F5.2:4,1,3@2-;F4:3,1,2@1+;F2.2:2,3@0-;F2.1:2,3@0-;F2.2:2,3@1+;F4:3,1,2@2-;F4:2,1,3@0-",
      "4 4,3,0,0 K 4 0 F3:3,2,4,1@1+;F2.2:1,4@0-;F3:1,4,3,2@2-;F2.1:1,4@0-;F2.2:1,4@1+;F4:1,2,4@0-",
      "4 4,3,0,1 K 1 0 F7:4,1,3,2@0+;F2.1:1,2@3-;F2.2:1,2@4+;F2.1:2,1@4+;F4:1,2,4@3+;F1:4,1@2+;F5.2:4,2,1@2-;F5.1:4,2,1@2-;F4:2,3,4@1-;F1:3,2@0+;F3:3,2,4,1@0+",
      "4 4,3,0,1 M 2 1 F7:3,2,4,1@1-;F4:3,2,4@0-;F1:3,2@0+",
      "4 4,3,0,1 M 2 3 F6:1,4,3@0-;F4:3,1,2@3-;F6:3,4,1@1-",
      "4 4,3,0,1 M 2 4 F6:1,4,3@0-;F7:1,4,3,2@0+;F4:4,1,2@3-;F1:1,4@2+",
      "4 4,3,0,1 K 3 0 F7:4,1,3,2@0+;F5.2:3,1,2@3+;F3:3,2,4,1@2-;F5.1:3,2,4@1-;F5.1:1,2,3@4+;F3:2,3,4,1@3-;F5.1:2,3,4@2-;F2.2:2,3@0-;F2.1:2,3@0-;F2.2:2,3@1+;F4:3,1,2@2-;F4:2,1,3@0-",
      "4 4,3,0,1 K 4 0 F7:4,1,3,2@0+;F5.1:4,1,2@3-;F2.1:4,1@2-;F2.2:1,4@3-;F5.1:1,4,2@5-;F2.1:1,4@3+;F5.1:1,4,2@4+;F4:4,1,2@2+;F1:2,4@1+;F4:2,3,4@1-;F1:3,2@0+",
      "4 4,3,0,2 M 1 2 F7:4,1,3,2@0-",
      "4 4,3,0,2 M 1 3 F1:3,2@0-;F4:3,1,2@0-",
      "4 4,3,0,2 M 1 4 F4:4,1,2@2+;F1:2,4@1+",
      "4 4,3,0,2 K 2 0 F4:2,1,4@3+;F5.1:2,4,1@2-;F2.2:2,4@1+;F2.1:4,2@1-;F2.2:2,4@1-;F4:2,1,4@2-;F1:2,1@2+;F5.1:4,2,1@2-;F4:2,3,4@1-;F1:3,2@0+;F3:3,2,4,1@0+",
      "4 4,3,0,2 K 3 0 F5.2:4,3,1@2-;F5.2:4,1,3@3-;F4:3,1,2@2+;F5.1:3,2,4@1-;F1:3,4@2-;F4:3,2,4@2-;F2.1:3,2@0+;F4:3,2,4@1+;F1:3,4@1+;F5.1:2,3,4@1-;F4:3,1,2@0-",
      "4 4,3,0,2 K 4 0 F2.2:1,4@2-;F5.2:2,1,4@1-;F3:1,4,3,2@0-;F2.1:1,4@3-;F2.2:1,4@3+;F4:4,1,2@4+;F5.2:2,4,1@2-;F1:2,4@3+;F3:3,2,4,1@1+;F4:1,2,4@0-",
      "4 4,3,1,0 K 1 0 F4:1,2,3@3+;F5.1:1,3,2@2-;F2.2:1,3@1+;F2.1:3,1@1-;F2.2:1,3@1-;F4:1,2,3@2-;F1:1,2@2+;F5.1:3,1,2@2-;F4:1,3,4@1+;F1:4,1@0+",
      "4 4,3,1,0 M 2 1 F7:3,2,4,1@0-",
      "4 4,3,1,0 M 2 3 F4:3,1,2@2-;F1:1,3@1+",
      "4 4,3,1,0 M 2 4 F1:4,1@0-;F4:4,1,3@0+;F6:1,4,3@1-;F7:3,2,1,4@2-;F4:3,1,4@1+;F4:4,1,3@0-",
      "4 4,3,1,0 K 3 0 F1:4,1@0-;F4:1,2,4@1-;F5.1:3,2,1@4+;F5.1:2,1,3@3-;F4:2,1,3@4-;F2.1:2,1@2+;F4:1,2,4@1+;F1:4,1@0+;F5.2:4,2,1@0-;F5.2:4,1,2@1-",
      "4 4,3,1,0 K 4 0 F3:3,2,4,1@2+;F5.1:4,1,3@1-;F1:4,3@2-;F3:1,4,3,2@5-;F4:4,1,3@2-;F2.1:4,1@0+;F4:4,1,3@1+;F1:4,3@1+;F5.1:1,4,3@1-",
      "4 4,3,2,0 M 1 2 F7:4,1,3,2@1-;F4:4,1,3@0-;F1:4,1@0+",
      "4 4,3,2,0 M 1 3 F6:2,3,4@0-;F7:2,3,4,1@0+;F4:3,1,2@3+;F1:2,3@2+",
      "4 4,3,2,0 M 1 4 F7:3,2,4,1@0+;F7:3,2,1,4@1+",
      "4 4,3,2,0 K 2 0 F7:3,2,4,1@0+;F2.1:2,1@3-;F2.2:1,2@4-;F2.1:1,2@4+;F4:2,1,3@3+;F1:3,2@2+;F5.2:3,1,2@2-;F5.1:3,1,2@2-;F4:1,3,4@1+;F1:4,1@0+",
      "4 4,3,2,0 K 3 0 F6:2,3,4@0-;F7:2,3,4,1@0+;F2.1:3,1@3-;F2.2:1,3@4-;F2.1:1,3@4+;F4:3,1,2@3+;F1:2,3@2+;F5.2:2,1,3@2-;F5.1:2,1,3@2-;F4:1,2,4@1+;F1:4,1@0+",
      "4 4,3,2,0 K 4 0 F7:3,2,4,1@0+;F5.2:2,4,1@3-;F3:3,2,4,1@2+;F5.1:4,1,3@1-;F2.2:1,4@0-;F2.1:1,4@0-;F5.2:2,1,4@5-;F3:1,4,3,2@4-;F5.1:1,4,3@3-;F2.2:1,4@1+;F4:1,2,4@0-",
      nullptr};
  std::size_t const insn_table_size = 1179;
}  // namespace partmon::detail
