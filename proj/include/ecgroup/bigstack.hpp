#ifndef ECGROUP_BIGSTACK_HPP
#define ECGROUP_BIGSTACK_HPP

#include <cstddef>
#include <functional>
#include <memory>

namespace ecgroup {

// The reduction pipeline recurses to a depth proportional to the
// polynomial degrees involved, and the large computations need more
// headroom than some default thread stacks provide. Work that reduces
// computation-scale forms runs on threads created here.

constexpr std::size_t kBigStackBytes = 256ull * 1024 * 1024;

// A joinable thread with an explicit stack size. join() rethrows
// anything the body threw.
class StackThread {
 public:
  StackThread(std::size_t stack_bytes, std::function<void()> fn);
  ~StackThread();
  StackThread(const StackThread&) = delete;
  StackThread& operator=(const StackThread&) = delete;

  void join();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Run fn on a fresh thread with the given stack size and wait for it.
void run_with_stack(std::size_t stack_bytes, const std::function<void()>& fn);

}  // namespace ecgroup

#endif  // ECGROUP_BIGSTACK_HPP
