#ifndef HZONO_PARALLEL_HPP_
#define HZONO_PARALLEL_HPP_

namespace hzono {

// Which kernel variant an oracle call dispatches to. The serial variants are
// the reference; the parallel ones must produce bitwise-identical results.
enum class Exec { Serial, Parallel };

int max_threads();

}  // namespace hzono

#endif  // HZONO_PARALLEL_HPP_
