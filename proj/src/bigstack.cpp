#include "ecgroup/bigstack.hpp"

#include <pthread.h>

#include <exception>
#include <stdexcept>
#include <system_error>
#include <utility>

namespace ecgroup {

struct StackThread::Impl {
  std::function<void()> fn;
  std::exception_ptr error;
  pthread_t tid{};
  bool joined = false;

  static void* trampoline(void* arg) {
    auto* impl = static_cast<Impl*>(arg);
    try {
      impl->fn();
    } catch (...) {
      impl->error = std::current_exception();
    }
    return nullptr;
  }
};

StackThread::StackThread(std::size_t stack_bytes, std::function<void()> fn)
    : impl_(std::make_unique<Impl>()) {
  impl_->fn = std::move(fn);
  pthread_attr_t attr;
  if (pthread_attr_init(&attr) != 0) throw std::runtime_error("pthread_attr_init failed");
  if (pthread_attr_setstacksize(&attr, stack_bytes) != 0) {
    pthread_attr_destroy(&attr);
    throw std::runtime_error("pthread_attr_setstacksize failed");
  }
  int rc = pthread_create(&impl_->tid, &attr, Impl::trampoline, impl_.get());
  pthread_attr_destroy(&attr);
  if (rc != 0) throw std::system_error(rc, std::generic_category(), "pthread_create");
}

StackThread::~StackThread() {
  if (impl_ && !impl_->joined) pthread_join(impl_->tid, nullptr);
}

void StackThread::join() {
  if (!impl_->joined) {
    pthread_join(impl_->tid, nullptr);
    impl_->joined = true;
  }
  if (impl_->error) {
    std::exception_ptr e = std::exchange(impl_->error, nullptr);
    std::rethrow_exception(e);
  }
}

void run_with_stack(std::size_t stack_bytes, const std::function<void()>& fn) {
  StackThread t(stack_bytes, fn);
  t.join();
}

}  // namespace ecgroup
