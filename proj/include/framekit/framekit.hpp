#ifndef FRAMEKIT_FRAMEKIT_HPP
#define FRAMEKIT_FRAMEKIT_HPP

#include <framekit/error.hpp>
#include <framekit/families.hpp>
#include <framekit/frame.hpp>
#include <framekit/frame_io.hpp>
#include <framekit/linalg.hpp>
#include <framekit/sym_approx.hpp>
#include <framekit/verification.hpp>

#endif
