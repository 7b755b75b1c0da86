#ifndef ROOKCONG_ERRORS_HPP
#define ROOKCONG_ERRORS_HPP

#include <stdexcept>

namespace rookcong {

  // A configured size budget would be exceeded.
  class resource_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // An internal consistency check failed: a constructed object violated a
  // property it must have by construction.
  class invariant_error : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

}  // namespace rookcong

#endif  // ROOKCONG_ERRORS_HPP
