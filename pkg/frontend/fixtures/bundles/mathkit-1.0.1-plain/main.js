/******/ (function() { // webpackBootstrap
/******/ 	var __webpack_modules__ = ({

/***/ "./node_modules/mathkit/index.js":
/*!***************************************!*\
  !*** ./node_modules/mathkit/index.js ***!
  \***************************************/
/***/ (function(module) {

function clamp(v, lo, hi) {
  return Math.min(Math.max(v, lo), hi);
}
function sum(xs) {
  var s = 0;
  for (var i = 0; i < xs.length; i++) { s += xs[i]; }
  return s;
}
function mean(xs) {
  if (xs.length === 0) { return 0; }
  return sum(xs) / xs.length;
}
function spread(xs) {
  var hi = xs[0];
  var lo = xs[0];
  for (var i = 1; i < xs.length; i++) {
    if (xs[i] > hi) { hi = xs[i]; }
    if (xs[i] < lo) { lo = xs[i]; }
  }
  return hi - lo;
}
function toNumber(value) {
  if (typeof value === 'number') { return value; }
  var parsed = parseFloat(String(value));
  return isNaN(parsed) ? 0 : parsed;
}
function round(value, places) {
  var factor = Math.pow(10, places || 0);
  return Math.round(value * factor) / factor;
}
function range(start, stop, step) {
  var out = [];
  var s = step || 1;
  for (var v = start; s > 0 ? v < stop : v > stop; v += s) {
    out.push(v);
  }
  return out;
}
function variance(xs) {
  if (xs.length < 2) { return 0; }
  var m = mean(xs);
  var acc = 0;
  for (var i = 0; i < xs.length; i++) {
    acc += (xs[i] - m) * (xs[i] - m);
  }
  return acc / (xs.length - 1);
}

module.exports = { clamp: clamp, sum: sum, mean: mean, spread: spread };


/***/ })

/******/ 	});
/************************************************************************/
/******/ 	// The module cache
/******/ 	var __webpack_module_cache__ = {};
/******/ 	
/******/ 	// The require function
/******/ 	function __webpack_require__(moduleId) {
/******/ 		// Check if module is in cache
/******/ 		var cachedModule = __webpack_module_cache__[moduleId];
/******/ 		if (cachedModule !== undefined) {
/******/ 			return cachedModule.exports;
/******/ 		}
/******/ 		// Create a new module (and put it into the cache)
/******/ 		var module = __webpack_module_cache__[moduleId] = {
/******/ 			// no module.id needed
/******/ 			// no module.loaded needed
/******/ 			exports: {}
/******/ 		};
/******/ 	
/******/ 		// Execute the module function
/******/ 		if (!(moduleId in __webpack_modules__)) {
/******/ 			delete __webpack_module_cache__[moduleId];
/******/ 			var e = new Error("Cannot find module '" + moduleId + "'");
/******/ 			e.code = 'MODULE_NOT_FOUND';
/******/ 			throw e;
/******/ 		}
/******/ 		__webpack_modules__[moduleId](module, module.exports, __webpack_require__);
/******/ 	
/******/ 		// Return the exports of the module
/******/ 		return module.exports;
/******/ 	}
/******/ 	
/************************************************************************/
// This entry needs to be wrapped in an IIFE because it needs to be isolated against other modules in the chunk.
!function() {
/*!******************!*\
  !*** ./entry.js ***!
  \******************/
var lib = __webpack_require__(/*! mathkit */ "./node_modules/mathkit/index.js");
console.log(lib);

}();
/******/ })()
;