/******/ (function() { // webpackBootstrap
/******/ 	var __webpack_modules__ = ({

/***/ "./node_modules/cachelet/index.js":
/*!****************************************!*\
  !*** ./node_modules/cachelet/index.js ***!
  \****************************************/
/***/ (function(module) {

function Cache(limit) {
  this.limit = limit;
  this.keys = [];
  this.values = {};
}
Cache.prototype.get = function (key) {
  if (!(key in this.values)) { return undefined; }
  return this.values[key];
};
Cache.prototype.set = function (key, value) {
  if (!(key in this.values)) {
    this.keys.push(key);
    if (this.keys.length > this.limit) {
      var oldest = this.keys.shift();
      delete this.values[oldest];
    }
  }
  this.values[key] = value;
};
Cache.prototype.has = function (key) {
  return key in this.values;
};
Cache.prototype.stats = function () {
  var used = this.keys.length;
  return { used: used, free: this.limit - used, limit: this.limit };
};
Cache.prototype.remove = function (key) {
  if (!(key in this.values)) { return false; }
  delete this.values[key];
  var at = this.keys.indexOf(key);
  if (at !== -1) { this.keys.splice(at, 1); }
  return true;
};
Cache.prototype.clear = function () {
  this.keys = [];
  this.values = {};
};
Cache.prototype.getOr = function (key, compute) {
  if (key in this.values) { return this.values[key]; }
  var value = compute(key);
  this.set(key, value);
  return value;
};
Cache.prototype.forEach = function (fn) {
  for (var i = 0; i < this.keys.length; i++) {
    fn(this.values[this.keys[i]], this.keys[i]);
  }
};

module.exports = { Cache: Cache };


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
var lib = __webpack_require__(/*! cachelet */ "./node_modules/cachelet/index.js");
console.log(lib);

}();
/******/ })()
;