#include "nambuflow/bundled.hpp"

#include "nambuflow/graphs_io.hpp"

namespace nambu {

GraphSum bundled_gamma3() {
  GraphSumBuilder b;
  b.add(ug_parse("ug 4 ; (0,1);(0,2);(0,3);(1,2);(1,3);(2,3)"), Rat(1));
  return b.take();
}

GraphSum bundled_gamma5() {
  GraphSumBuilder b;
  b.add(ug_parse("ug 6 ; (0,1);(0,2);(0,3);(0,4);(0,5);(1,2);(1,3);(2,4);(3,5);(4,5)"),
        Rat(1));
  b.add(ug_parse("ug 6 ; (0,1);(0,2);(0,3);(0,4);(1,2);(1,3);(1,5);(2,4);(3,5);(4,5)"),
        Rat(5, 2));
  return b.take();
}

KSum bundled_sunflower_2d() {
  KSumBuilder b;
  b.add(parse_kontsevich("(0,1;1,3;1,2)", 1), Rat(1));
  b.add(parse_kontsevich("(0,2;1,3;1,2)", 1), Rat(2));
  return b.take();
}

KSum bundled_ham_gamma3() {
  KSumBuilder b;
  b.add(parse_kontsevich("(1,3;1,2)", 0, 1), Rat(1));
  return b.take();
}

KSum bundled_ham_gamma5() {
  KSumBuilder b;
  b.add(parse_kontsevich("(3,5;4,5;1,2;1,2)", 0, 1), Rat(6));
  b.add(parse_kontsevich("(3,5;4,5;1,2;1,4)", 0, 1), Rat(-2));
  b.add(parse_kontsevich("(1,5;1,4;1,2;1,3)", 0, 1), Rat(-2));
  return b.take();
}

}  // namespace nambu
