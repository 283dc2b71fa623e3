#pragma once

#include <span>

namespace qws {

struct PeakResult {
  double P = 0;
  long t2 = 0;
  bool valid = false;
};

// First-cycle peak detector. The running maximum becomes the peak once the
// probability has dropped below half of it and at least ten samples have
// passed since it was set. Ties keep the earliest maximum.
class PeakDetector {
 public:
  // Feed the probability recorded after query t2 = 1, 2, ...
  // Returns true once the peak is confirmed; further samples are ignored.
  bool feed(double prob) {
    if (triggered_) return true;
    ++n_;
    if (prob > max_) {
      max_ = prob;
      argmax_ = n_;
    } else if (prob < 0.5 * max_ && n_ - argmax_ >= 10) {
      triggered_ = true;
    }
    return triggered_;
  }

  bool triggered() const { return triggered_; }
  long samples() const { return n_; }

  PeakResult result() const {
    if (!triggered_ || n_ < 3) return PeakResult{max_, argmax_, false};
    return PeakResult{max_, argmax_, true};
  }

 private:
  double max_ = -1;
  long argmax_ = 0;
  long n_ = 0;
  bool triggered_ = false;
};

inline PeakResult detect_first_peak(std::span<const double> probs) {
  PeakDetector det;
  for (double p : probs)
    if (det.feed(p)) break;
  if (probs.size() < 3) {
    auto r = det.result();
    return PeakResult{r.P, r.t2, false};
  }
  return det.result();
}

}  // namespace qws
