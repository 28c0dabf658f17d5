(function(){var t={29:function(t){function n(){this.handlers={}}n.prototype.on=function(t,n){if(!this.handlers[t]){this.handlers[t]=[]}this.handlers[t].push(n);return this};n.prototype.emit=function(t,n){var r=this.handlers[t]||[];for(var e=0;e<r.length;e++){r[e](n)}return r.length};n.prototype.listenerCount=function(t){var n=this.handlers[t];return n?n.length:0};n.prototype.off=function(t,n){var r=this.handlers[t];if(!r){return this}var e=r.indexOf(n);if(e!==-1){r.splice(e,1)}return this};n.prototype.names=function(){var t=[];for(var n in this.handlers){if(this.handlers[n].length>0){t.push(n)}}return t};n.prototype.clear=function(t){if(t===undefined){this.handlers={}}else{delete this.handlers[t]}return this};n.prototype.pipe=function(t,n,r){return this.on(t,function(e){n.emit(r===undefined?t:r,e)})};t.exports={Emitter:n}}};var n={};function r(e){var i=n[e];if(i!==undefined){return i.exports}var o=n[e]={exports:{}};t[e](o,o.exports,r);return o.exports}var e=r(29);console.log(e)})();