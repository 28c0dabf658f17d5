/******/ (function() { // webpackBootstrap
/******/ 	var __webpack_modules__ = ({

/***/ "./node_modules/stringbench/index.js":
/*!*******************************************!*\
  !*** ./node_modules/stringbench/index.js ***!
  \*******************************************/
/***/ (function(module) {

function pad(text, width) {
  var out = String(text);
  if (out.length >= width) { return out; }
  return new Array(width - out.length + 1).join(' ') + out;
}
function collapse(text) {
  return text.replace(/\s+/g, ' ').replace(/^ | $/g, '');
}
function camel(text) {
  var parts = text.split('-');
  var out = parts[0];
  for (var i = 1; i < parts.length; i++) {
    out += parts[i].charAt(0).toUpperCase() + parts[i].slice(1);
  }
  return out;
}
function count(text, needle) {
  var n = 0;
  var at = text.indexOf(needle);
  while (at !== -1) {
    n++;
    at = text.indexOf(needle, at + needle.length);
  }
  return n;
}
function repeat(text, count) {
  var out = '';
  for (var i = 0; i < count; i++) { out += text; }
  return out;
}
function startsWith(text, prefix) {
  return text.lastIndexOf(prefix, 0) === 0;
}
function endsWith(text, suffix) {
  var at = text.length - suffix.length;
  return at >= 0 && text.indexOf(suffix, at) === at;
}
function template(text, values) {
  return text.replace(/\{(\w+)\}/g, function (match, key) {
    return key in values ? String(values[key]) : match;
  });
}
function lines(text) {
  var out = text.split(/\r?\n/);
  while (out.length > 0 && out[out.length - 1] === '') { out.pop(); }
  return out;
}

module.exports = { pad: pad, collapse: collapse, camel: camel, count: count };


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
var lib = __webpack_require__(/*! stringbench */ "./node_modules/stringbench/index.js");
console.log(lib);

}();
/******/ })()
;