#include "qramsey/fixtures.hpp"

namespace qramsey {

const std::vector<FigureFixture>& figure_fixtures() {
  static const std::vector<FigureFixture> fixtures = {
      {"fig1a",
       {"px", "py", "lx"},
       "# bi-colored three-vertex graph; the source makes no triangle claim\n"},
      {"fig1b",
       {"lx", "ly", "lz"},
       "claim fig1b.green mono green lx ly lz\n"},
      {"fig1c",
       {"px", "py", "x", "y"},
       "claim fig1c.none none\n"},
      {"fig2a",
       {"px", "py", "pz", "z", "y"},
       "claim fig2a.pxpypz mono red px py pz\n"
       "claim fig2a.pxpyz mono red px py z\n"
       "claim fig2a.pxpzy mono red px pz y\n"
       "claim fig2a.pyzy mono red py z y\n"},
      {"fig2b",
       {"px", "py", "pz", "ly", "lz"},
       "claim fig2b.pxpyly mono red px py ly\n"
       "# the source asserts this triangle is monochromatic without naming a color\n"
       "claim fig2b.pxpzlz mono any px pz lz\n"},
      {"fig2c",
       {"px", "py", "lx", "ly", "lz"},
       "claim fig2c.pxlxly mono green px lx ly\n"
       "claim fig2c.lxlylz mono green lx ly lz\n"},
      {"fig3a",
       {"px", "py", "lx", "ly", "x"},
       "claim fig3a.caption mono green px lx x\n"
       "# the accompanying text names ly instead of lx\n"
       "claim fig3a.text mono green px ly x\n"
       "claim fig3a.quad mono any px py lx x\n"},
      {"fig3b",
       {"px", "py", "lx", "ly", "H_central"},
       "claim fig3b.none none\n"},
      {"fig3c",
       {"r", "pr", "lz", "H_central", "L2"},
       "claim fig3c.rprL2 mono red r pr L2\n"
       "claim fig3c.prlzL2 mono red pr lz L2\n"
       "# names lx, which is not a vertex of this graph\n"
       "claim fig3c.rlxpr mono green r lx pr\n"
       "claim fig3c.rprH mono green r pr H_central\n"
       "claim fig3c.rL2lz mono red r L2 lz\n"},
      {"fig4",
       {"px", "py", "pz", "x", "y", "z"},
       "claim fig4.pxpypz mono red px py pz\n"
       "claim fig4.pypzx mono red py pz x\n"
       "claim fig4.pzxy mono red pz x y\n"
       "claim fig4.pxyz mono red px y z\n"
       "claim fig4.xyz mono red x y z\n"
       "claim fig4.nogreen none green\n"},
  };
  return fixtures;
}

const FigureFixture& fig3b_generic_variant() {
  static const FigureFixture variant = {
      "fig3b_generic",
      {"px", "py", "lx", "ly", "H_generic"},
      "claim fig3b_generic.none none\n"};
  return variant;
}

}  // namespace qramsey
