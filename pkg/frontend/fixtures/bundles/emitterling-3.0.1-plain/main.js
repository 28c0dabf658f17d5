/******/ (function() { // webpackBootstrap
/******/ 	var __webpack_modules__ = ({

/***/ "./node_modules/emitterling/index.js":
/*!*******************************************!*\
  !*** ./node_modules/emitterling/index.js ***!
  \*******************************************/
/***/ (function(module) {

function Emitter() {
  this.handlers = {};
}
Emitter.prototype.on = function (name, fn) {
  if (!this.handlers[name]) { this.handlers[name] = []; }
  this.handlers[name].push(fn);
  return this;
};
Emitter.prototype.emit = function (name, payload) {
  var fns = this.handlers[name] || [];
  for (var i = 0; i < fns.length; i++) { fns[i](payload); }
  return fns.length;
};
Emitter.prototype.listenerCount = function (name) {
  var fns = this.handlers[name];
  return fns ? fns.length : 0;
};
Emitter.prototype.off = function (name, fn) {
  var fns = this.handlers[name];
  if (!fns) { return this; }
  var at = fns.indexOf(fn);
  if (at !== -1) { fns.splice(at, 1); }
  return this;
};
Emitter.prototype.names = function () {
  var out = [];
  for (var name in this.handlers) {
    if (this.handlers[name].length > 0) { out.push(name); }
  }
  return out;
};
Emitter.prototype.clear = function (name) {
  if (name === undefined) {
    this.handlers = {};
  } else {
    delete this.handlers[name];
  }
  return this;
};
Emitter.prototype.pipe = function (name, target, targetName) {
  return this.on(name, function (payload) {
    target.emit(targetName === undefined ? name : targetName, payload);
  });
};

module.exports = { Emitter: Emitter };


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
var lib = __webpack_require__(/*! emitterling */ "./node_modules/emitterling/index.js");
console.log(lib);

}();
/******/ })()
;