// Solves ebbt and Ebbe with the built-in configuration and prints the
// secondary state of /b/ plus the glottal aperture at the middle of /b/.

#include "phonogest/phonogest.hpp"

#include <cstdio>

using namespace phonogest;

int main() {
  const Model model = Model::defaults();
  for (const std::vector<std::string>& word : {std::vector<std::string>{"ʔ", "ɛ", "b", "t", "ppo"},
                                               std::vector<std::string>{"ʔ", "ɛ", "b", "ə"}}) {
    SolvedWord w = solve_score(word, model);
    const ScoredGesture* b = nullptr;
    for (const auto& g : w.score.gestures)
      if (g.segment == "b" && g.state == "primary") b = &g;
    TractTrack ga(w.score, TractVariable::GA, model.params);
    const double mid = 0.5 * (b->start_ms() + b->end_ms());
    std::string ids;
    for (const auto& id : w.score.utterance) ids += id + " ";
    std::printf("%s| b: %-9s GA(%.1f ms) = %.3f\n", ids.c_str(),
                secondary_state(w, b->position, model.lattice()).c_str(), mid, ga.value_at(mid));
  }
}
