#pragma once

#include <string>
#include <vector>

namespace qramsey {

// A built-in graph fixture: vertex set plus the source's caption claims in
// the claims-file line format.
struct FigureFixture {
  std::string tag;
  std::vector<std::string> vertices;
  std::string claims_text;
};

// The ten canonical fixtures (fig1a..fig4). fig3b uses the central-field
// Hamiltonian; its no-monochromatic-triangle claim only holds there.
const std::vector<FigureFixture>& figure_fixtures();

// Same vertex set as fig3b but with the generic Hamiltonian, under which the
// claim is refuted. Emitted alongside the canonical run as a cross-check.
const FigureFixture& fig3b_generic_variant();

}  // namespace qramsey
